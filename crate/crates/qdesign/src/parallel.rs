//! Haar Monte Carlo estimates on the rayon pool.
//!
//! Chunks are evaluated in parallel and merged in chunk order, so the result is
//! bit-identical to [`qdesign_core::haar::haar_moment_estimate`] for any thread count.

use qdesign_core::haar::{chunk_partial, chunk_plan, finish_estimate, validate_estimate, SampleEstimate};
use qdesign_core::linalg::DensityMatrix;
use rayon::prelude::*;

/// Parallel `∫ ⟨ψ|ρ|ψ⟩^t dψ`.
pub fn haar_moment_estimate(
    rho: &DensityMatrix,
    t: usize,
    samples: usize,
    seed: u64,
) -> qdesign_core::Result<SampleEstimate> {
    validate_estimate(t, samples)?;
    let partials = chunk_plan(samples)
        .into_par_iter()
        .map(|(index, len)| chunk_partial(rho, t, seed, index, len))
        .collect::<qdesign_core::Result<Vec<_>>>()?;
    Ok(finish_estimate(&partials, seed))
}
