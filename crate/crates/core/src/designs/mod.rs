//! Quantum designs: the catalog, frame-potential verification and grouping of design
//! states into rank-1 POVMs.
//!
//! A set `{|ψ_k⟩}` of `K` unit vectors in `C^d` is a `t`-design exactly when its frame
//! potential `(1/K²) Σ_{j,k} |⟨ψ_j|ψ_k⟩|^{2t}` equals `D_t^d`; for any other set the
//! frame potential is strictly larger. This scalar test replaces building the
//! symmetric projector on `(C^d)^{⊗t}`.

mod catalog;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::combinatorics::{sym_dim_inverse, to_f64, MAX_T};
use crate::linalg::{PureState, SPECTRAL_TOL};
use crate::measurements::{MeasurementAssembly, Povm, SourceDesign};
use crate::{Error, Result};

pub use catalog::{catalog, mub_states, CATALOG_NAMES, DEFORMED_SNUB_SEED, REGULAR_SNUB_SEED};

/// Default frame-potential tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A finite set of unit vectors claimed to form a `declared_t`-design.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignSet {
    name: String,
    dim: usize,
    vectors: Vec<PureState>,
    declared_t: usize,
}

impl DesignSet {
    /// Builds a design and checks it against every strength `1..=declared_t`.
    pub fn new(name: impl Into<String>, vectors: Vec<PureState>, declared_t: usize) -> Result<Self> {
        let design = Self::unverified(name, vectors, declared_t)?;
        design.check_strength(DEFAULT_TOL)?;
        Ok(design)
    }

    /// Builds a design without checking the declared strength.
    pub fn unverified(name: impl Into<String>, vectors: Vec<PureState>, declared_t: usize) -> Result<Self> {
        let dim = vectors.first().map(PureState::dim).ok_or(Error::EmptyDesign)?;
        if let Some(bad) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        if declared_t == 0 || declared_t > MAX_T {
            return Err(Error::UnsupportedT {
                t: declared_t,
                max: MAX_T,
            });
        }
        Ok(Self {
            name: name.into(),
            dim,
            vectors,
            declared_t,
        })
    }

    /// Verifies `s = 1..=declared_t` in turn and reports the first failing strength.
    pub fn check_strength(&self, tol: f64) -> Result<()> {
        let overlaps = overlap_table(&self.vectors);
        for t in 1..=self.declared_t {
            let report = report_from_overlaps(&overlaps, self.dim, t, tol)?;
            if !report.passed {
                return Err(Error::VerificationFailed {
                    t,
                    deviation: report.deviation,
                });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[PureState] {
        &self.vectors
    }

    /// Number of vectors `K`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn declared_t(&self) -> usize {
        self.declared_t
    }
}

/// Outcome of a frame-potential check at one strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport {
    pub t_tested: usize,
    pub frame_potential: f64,
    /// `D_t^d`.
    pub target: f64,
    /// `frame_potential - target`; non-negative up to rounding.
    pub deviation: f64,
    pub passed: bool,
}

fn overlap_table(states: &[PureState]) -> Vec<f64> {
    let k = states.len();
    let mut table = vec![0.0; k * k];
    for j in 0..k {
        table[j * k + j] = states[j].overlap_sq(&states[j]);
        for l in (j + 1)..k {
            let o = states[j].overlap_sq(&states[l]);
            table[j * k + l] = o;
            table[l * k + j] = o;
        }
    }
    table
}

fn potential_from_overlaps(overlaps: &[f64], t: usize) -> f64 {
    let sum: f64 = overlaps.iter().map(|o| o.powi(t as i32)).sum();
    sum / overlaps.len() as f64
}

fn report_from_overlaps(overlaps: &[f64], dim: usize, t: usize, tol: f64) -> Result<VerificationReport> {
    if t == 0 || t > MAX_T {
        return Err(Error::UnsupportedT { t, max: MAX_T });
    }
    let frame_potential = potential_from_overlaps(overlaps, t);
    let target = to_f64(&sym_dim_inverse(t, dim)?);
    let deviation = frame_potential - target;
    Ok(VerificationReport {
        t_tested: t,
        frame_potential,
        target,
        deviation,
        passed: deviation.abs() <= tol,
    })
}

/// `(1/K²) Σ_{j,k} |⟨ψ_j|ψ_k⟩|^{2t}` for an arbitrary set of states.
pub fn frame_potential(states: &[PureState], t: usize) -> Result<f64> {
    if states.is_empty() {
        return Err(Error::EmptyDesign);
    }
    if t == 0 || t > MAX_T {
        return Err(Error::UnsupportedT { t, max: MAX_T });
    }
    Ok(potential_from_overlaps(&overlap_table(states), t))
}

/// Frame-potential check of `design` at strength `t`.
pub fn verify_design(design: &DesignSet, t: usize, tol: f64) -> Result<VerificationReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive"));
    }
    report_from_overlaps(&overlap_table(design.vectors()), design.dim(), t, tol)
}

fn assemble(design: &DesignSet, groups: Vec<Vec<usize>>) -> Result<MeasurementAssembly> {
    let grouped: Vec<Vec<PureState>> = groups
        .iter()
        .map(|g| g.iter().map(|&i| design.vectors()[i].clone()).collect())
        .collect();
    let povms = grouped
        .iter()
        .map(|states| Povm::rank_one(states))
        .collect::<Result<Vec<_>>>()?;
    Ok(MeasurementAssembly::new(povms)?.with_source(SourceDesign {
        name: design.name().into(),
        strength: design.declared_t(),
        states: grouped,
    }))
}

/// Splits a design into `M` rank-1 projective measurements.
///
/// Qubit designs are paired into antipodal (orthogonal) states; in higher dimension the
/// states are grouped into orthonormal bases by backtracking search. Fails with
/// [`Error::NoOrthogonalPairs`] when no such grouping exists, in which case the design
/// can still be used as a single POVM via [`single_povm`].
pub fn partition_into_povms(design: &DesignSet) -> Result<MeasurementAssembly> {
    let d = design.dim();
    let k = design.len();
    if d < 2 || k % d != 0 {
        return Err(Error::NoOrthogonalPairs);
    }
    let states = design.vectors();
    let orthogonal = |a: usize, b: usize| states[a].overlap_sq(&states[b]) < SPECTRAL_TOL;

    let mut used = vec![false; k];
    let mut groups = Vec::with_capacity(k / d);
    if search_bases(&mut used, &mut groups, d, &orthogonal) {
        assemble(design, groups)
    } else {
        Err(Error::NoOrthogonalPairs)
    }
}

fn search_bases<F: Fn(usize, usize) -> bool>(
    used: &mut [bool],
    groups: &mut Vec<Vec<usize>>,
    d: usize,
    orthogonal: &F,
) -> bool {
    let Some(first) = used.iter().position(|u| !u) else {
        return true;
    };
    used[first] = true;
    let mut basis = vec![first];
    if extend_basis(used, &mut basis, groups, d, orthogonal, first + 1) {
        return true;
    }
    used[first] = false;
    false
}

fn extend_basis<F: Fn(usize, usize) -> bool>(
    used: &mut [bool],
    basis: &mut Vec<usize>,
    groups: &mut Vec<Vec<usize>>,
    d: usize,
    orthogonal: &F,
    from: usize,
) -> bool {
    if basis.len() == d {
        groups.push(basis.clone());
        if search_bases(used, groups, d, orthogonal) {
            return true;
        }
        groups.pop();
        return false;
    }
    for cand in from..used.len() {
        if used[cand] || !basis.iter().all(|&b| orthogonal(b, cand)) {
            continue;
        }
        used[cand] = true;
        basis.push(cand);
        if extend_basis(used, basis, groups, d, orthogonal, cand + 1) {
            return true;
        }
        basis.pop();
        used[cand] = false;
    }
    false
}

/// Groups design states by explicit index lists; every group must have the same size `n`
/// and its effects `(d/n)|ψ⟩⟨ψ|` must sum to the identity.
pub fn partition_with_grouping(design: &DesignSet, groups: &[Vec<usize>]) -> Result<MeasurementAssembly> {
    let k = design.len();
    let n = groups
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidGrouping("no groups".into()))?;
    let mut seen = vec![false; k];
    for g in groups {
        if g.len() != n {
            return Err(Error::InvalidGrouping(format!("group sizes {} and {}", n, g.len())));
        }
        for &i in g {
            if i >= k {
                return Err(Error::InvalidGrouping(format!("index {i} out of range")));
            }
            if seen[i] {
                return Err(Error::InvalidGrouping(format!("index {i} used twice")));
            }
            seen[i] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidGrouping("not every state is assigned".into()));
    }
    assemble(design, groups.to_vec())
}

/// The whole design as one `K`-outcome POVM with effects `(d/K)|ψ_k⟩⟨ψ_k|`.
pub fn single_povm(design: &DesignSet) -> Result<MeasurementAssembly> {
    assemble(design, vec![(0..design.len()).collect()])
}
