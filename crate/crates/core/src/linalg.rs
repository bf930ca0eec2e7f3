//! Small dense complex linear algebra: pure states, density matrices and the qubit
//! Bloch correspondence.
//!
//! Dimensions are expected to stay small (d up to a few dozen). Matrix powers are
//! formed by repeated multiplication; the Hermitian eigensolver is only used to
//! validate positivity.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

pub use nalgebra::Complex;

/// Complex double.
pub type C64 = Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = DMatrix<C64>;

/// Tolerance for norms, Hermiticity and traces.
pub const STRUCTURAL_TOL: f64 = 1e-12;
/// Tolerance for eigenvalues and matrix-product accumulations.
pub const SPECTRAL_TOL: f64 = 1e-10;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// A unit vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: DVector<C64>,
}

impl PureState {
    /// Wraps amplitudes that already have unit norm (within [`STRUCTURAL_TOL`]).
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::ZeroVector);
        }
        let amplitudes = DVector::from_vec(amplitudes);
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > STRUCTURAL_TOL {
            return Err(Error::NormViolation { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        let mut amplitudes = DVector::from_vec(amplitudes);
        let norm = amplitudes.norm();
        if amplitudes.is_empty() || norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        amplitudes.unscale_mut(norm);
        Ok(Self { amplitudes })
    }

    /// Computational basis vector `|k⟩` of `C^d`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if dim == 0 || k >= dim {
            return Err(Error::InvalidArgument("basis index out of range"));
        }
        let mut amplitudes = DVector::zeros(dim);
        amplitudes[k] = c(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        self.amplitudes.as_slice()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// `|⟨self|other⟩|²`.
    pub fn overlap_sq(&self, other: &PureState) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn projector(&self) -> CMatrix {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    /// `⟨ψ|ρ|ψ⟩`, real for Hermitian `ρ`.
    pub fn expectation(&self, rho: &DensityMatrix) -> Result<f64> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: rho.dim(),
                found: self.dim(),
            });
        }
        Ok(self.amplitudes.dotc(&(&rho.entries * &self.amplitudes)).re)
    }

    /// Complex conjugate of the amplitudes in the computational basis.
    pub fn conjugate(&self) -> PureState {
        Self {
            amplitudes: self.amplitudes.map(|z| z.conj()),
        }
    }
}

/// A positive-semidefinite, unit-trace Hermitian operator on `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(entries: CMatrix) -> Result<Self> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows == 0 {
            return Err(Error::NotSquare { rows, cols });
        }
        let herm = hermiticity_defect(&entries);
        if herm > STRUCTURAL_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = entries.trace();
        if (tr.re - 1.0).abs() > STRUCTURAL_TOL || tr.im.abs() > STRUCTURAL_TOL {
            return Err(Error::InvalidTrace(tr.re));
        }
        let min = min_eigenvalue(&entries);
        if min < -SPECTRAL_TOL {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { entries })
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            entries: psi.projector(),
        }
    }

    /// `1/d`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            entries: CMatrix::identity(dim, dim).unscale(dim as f64),
        }
    }

    /// Convex combination `(1 - p)·self + p·other`.
    pub fn mix(&self, other: &DensityMatrix, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidArgument("mixing weight outside [0, 1]"));
        }
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(Self {
            entries: self.entries.scale(1.0 - p) + other.entries.scale(p),
        })
    }

    /// Qubit family `(1 - p)|0⟩⟨0| + p·1/2`.
    pub fn qubit_mixture(p: f64) -> Result<Self> {
        let zero = Self::from_pure(&PureState::basis(2, 0)?);
        zero.mix(&Self::maximally_mixed(2), p)
    }

    /// `ρ_A ⊗ ρ_B`.
    pub fn tensor(&self, other: &DensityMatrix) -> Self {
        Self {
            entries: self.entries.kronecker(&other.entries),
        }
    }

    /// `|Φ+⟩⟨Φ+|` with `|Φ+⟩ = d^{-1/2} Σ_i |ii⟩` on `C^d ⊗ C^d`.
    pub fn maximally_entangled(dim: usize) -> Self {
        let mut v = DVector::zeros(dim * dim);
        let amp = c(1.0 / (dim as f64).sqrt(), 0.0);
        for i in 0..dim {
            v[i * dim + i] = amp;
        }
        Self {
            entries: &v * v.adjoint(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    /// `tr[ρ^m]`.
    pub fn moment(&self, m: usize) -> Result<f64> {
        if m == 0 {
            return Err(Error::InvalidMoment);
        }
        Ok(*self.moments(m).last().expect("m >= 1"))
    }

    /// `[tr ρ, tr ρ², …, tr ρ^up_to]`.
    pub fn moments(&self, up_to: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(up_to);
        if up_to == 0 {
            return out;
        }
        let mut power = self.entries.clone();
        out.push(power.trace().re);
        for _ in 1..up_to {
            power = &power * &self.entries;
            out.push(power.trace().re);
        }
        out
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.entries.clone().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        ev
    }

    /// `Re tr[ρ·op]`.
    pub fn expectation(&self, op: &CMatrix) -> Result<f64> {
        if op.shape() != self.entries.shape() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: op.nrows(),
            });
        }
        // tr[ρ A] = Σ_ij ρ_ij A_ji
        let mut acc = c(0.0, 0.0);
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                acc += self.entries[(i, j)] * op[(j, i)];
            }
        }
        Ok(acc.re)
    }
}

/// Largest entry modulus `max_ij |A_ij|`.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr().sqrt()).fold(0.0, f64::max)
}

/// Largest entry of `|A - A†|`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let diff = m[(i, j)] - m[(j, i)].conj();
            worst = worst.max(diff.norm_sqr().sqrt());
        }
    }
    worst
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &CMatrix) -> f64 {
    m.clone()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Real coordinates `(⟨σ_x⟩, ⟨σ_y⟩, ⟨σ_z⟩)` of a qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Rescales to the unit sphere.
    pub fn normalized(self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self::new(self.x / n, self.y / n, self.z / n))
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn antipode(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }

    /// Pure qubit state with this Bloch vector; the `|0⟩` amplitude is real and non-negative.
    pub fn to_state(&self) -> Result<PureState> {
        let n = self.norm();
        if (n - 1.0).abs() > STRUCTURAL_TOL {
            return Err(Error::NonUnitBloch(n));
        }
        let a = ((1.0 + self.z) / 2.0).max(0.0).sqrt();
        let b_abs = ((1.0 - self.z) / 2.0).max(0.0).sqrt();
        let rho = self.x.hypot(self.y);
        let b = if rho > 0.0 {
            c(b_abs * self.x / rho, b_abs * self.y / rho)
        } else {
            c(b_abs, 0.0)
        };
        PureState::normalized(alloc::vec![c(a, 0.0), b])
    }

    /// Bloch vector of a qubit state.
    pub fn from_state(psi: &PureState) -> Result<Self> {
        if psi.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: psi.dim(),
            });
        }
        let a = psi.amplitudes()[0];
        let b = psi.amplitudes()[1];
        let ab = a.conj() * b;
        Ok(Self::new(2.0 * ab.re, 2.0 * ab.im, a.norm_sqr() - b.norm_sqr()))
    }
}

/// Identity matrix of size `d`.
pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}
