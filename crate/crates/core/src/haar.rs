//! Seeded Haar-random pure states and Monte Carlo estimates of `∫ ⟨ψ|ρ|ψ⟩^t dψ`.
//!
//! Samples are drawn in fixed-size chunks, chunk `i` from its own ChaCha8 stream `i` under
//! the run seed. Chunk statistics are merged in chunk order, so an estimate depends only on
//! `(seed, samples)` and not on how chunks are distributed over threads.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{c, CMatrix, DensityMatrix, PureState, C64};
use crate::{Error, Result};

/// Samples per chunk.
pub const CHUNK_SIZE: usize = 4096;

/// Smallest sample count accepted by [`haar_moment_estimate`].
pub const MIN_SAMPLES: usize = 1000;

/// Default sample count.
pub const DEFAULT_SAMPLES: usize = 100_000;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A Haar-random unit vector in `C^d`, phase fixed so the first amplitude is real and non-negative.
pub fn sample_pure<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Result<PureState> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1"));
    }
    loop {
        let mut v: Vec<C64> = (0..d).map(|_| gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let a0 = v[0].norm_sqr().sqrt();
        let phase = if a0 > 0.0 { v[0].conj() / a0 } else { c(1.0, 0.0) };
        for z in &mut v {
            *z = *z * phase / norm;
        }
        v[0] = c(v[0].re.max(0.0), 0.0);
        return PureState::normalized(v);
    }
}

/// A random mixed state `G G† / tr(G G†)` with `G` a `d × d` complex Ginibre matrix.
pub fn random_density_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Result<DensityMatrix> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1"));
    }
    let g: CMatrix = DMatrix::from_fn(d, d, |_, _| gaussian(rng));
    let mut w = &g * g.adjoint();
    let tr = w.trace().re;
    w.unscale_mut(tr);
    // enforce exact Hermiticity against rounding in the product
    let w = (&w + w.adjoint()).unscale(2.0);
    DensityMatrix::new(w)
}

/// A random pure state as a density matrix.
pub fn random_pure_density<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Result<DensityMatrix> {
    Ok(DensityMatrix::from_pure(&sample_pure(d, rng)?))
}

/// Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleEstimate {
    pub mean: f64,
    /// Sample standard deviation over `√samples`.
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

impl SampleEstimate {
    /// `|mean - target|` in units of the standard error (zero-variance runs compare exactly).
    pub fn z_score(&self, target: f64) -> f64 {
        let diff = (self.mean - target).abs();
        if self.stderr > 0.0 {
            diff / self.stderr
        } else if diff <= 1e-12 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

/// Running count, mean and centred second moment of one chunk.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MomentPartial {
    pub count: usize,
    pub mean: f64,
    pub m2: f64,
}

impl MomentPartial {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Pooled statistics of two disjoint sample sets.
    pub fn merge(self, other: MomentPartial) -> MomentPartial {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let n = self.count + other.count;
        let delta = other.mean - self.mean;
        MomentPartial {
            count: n,
            mean: self.mean + delta * other.count as f64 / n as f64,
            m2: self.m2 + other.m2 + delta * delta * (self.count as f64 * other.count as f64) / n as f64,
        }
    }
}

/// `(chunk index, chunk length)` pairs covering `samples`.
pub fn chunk_plan(samples: usize) -> Vec<(u64, usize)> {
    (0..samples.div_ceil(CHUNK_SIZE))
        .map(|i| (i as u64, CHUNK_SIZE.min(samples - i * CHUNK_SIZE)))
        .collect()
}

/// The generator for chunk `index` of the run `seed`.
pub fn chunk_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Statistics of `⟨ψ|ρ|ψ⟩^t` over one chunk.
pub fn chunk_partial(rho: &DensityMatrix, t: usize, seed: u64, index: u64, len: usize) -> Result<MomentPartial> {
    let mut rng = chunk_rng(seed, index);
    let mut acc = MomentPartial::default();
    for _ in 0..len {
        let psi = sample_pure(rho.dim(), &mut rng)?;
        acc.push(psi.expectation(rho)?.powi(t as i32));
    }
    Ok(acc)
}

/// Merges chunk statistics, in the given order, into an estimate.
pub fn finish_estimate(partials: &[MomentPartial], seed: u64) -> SampleEstimate {
    let total = partials.iter().fold(MomentPartial::default(), |acc, p| acc.merge(*p));
    let var = if total.count > 1 {
        total.m2 / (total.count - 1) as f64
    } else {
        0.0
    };
    SampleEstimate {
        mean: total.mean,
        stderr: (var / total.count as f64).sqrt(),
        samples: total.count,
        seed,
    }
}

fn check_estimate_args(t: usize, samples: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1"));
    }
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument("at least 1000 samples are required"));
    }
    Ok(())
}

/// Estimates `∫ ⟨ψ|ρ|ψ⟩^t dψ` over Haar-random `ψ`; expected value `D_t^d F_t(ρ)`.
pub fn haar_moment_estimate(rho: &DensityMatrix, t: usize, samples: usize, seed: u64) -> Result<SampleEstimate> {
    check_estimate_args(t, samples)?;
    let partials = chunk_plan(samples)
        .into_iter()
        .map(|(i, len)| chunk_partial(rho, t, seed, i, len))
        .collect::<Result<Vec<_>>>()?;
    Ok(finish_estimate(&partials, seed))
}

/// Argument checks shared with parallel drivers.
pub fn validate_estimate(t: usize, samples: usize) -> Result<()> {
    check_estimate_args(t, samples)
}
