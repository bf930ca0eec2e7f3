//! POVMs, measurement assemblies, outcome statistics and depolarizing noise.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{
    hermiticity_defect, identity, max_abs, min_eigenvalue, CMatrix, DensityMatrix, PureState, SPECTRAL_TOL,
};
use crate::{Error, Result};

/// A positive-operator-valued measure on `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    effects: Vec<CMatrix>,
    dim: usize,
}

impl Povm {
    /// Validates that every effect is Hermitian and PSD and that they sum to the identity.
    pub fn new(effects: Vec<CMatrix>) -> Result<Self> {
        let dim = effects
            .first()
            .map(CMatrix::nrows)
            .ok_or(Error::InvalidArgument("POVM needs at least one effect"))?;
        let mut total = CMatrix::zeros(dim, dim);
        for e in &effects {
            if e.nrows() != dim || e.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: e.nrows(),
                });
            }
            let herm = hermiticity_defect(e);
            if herm > SPECTRAL_TOL {
                return Err(Error::NotHermitian(herm));
            }
            let min = min_eigenvalue(e);
            if min < -SPECTRAL_TOL {
                return Err(Error::NotPositive(min));
            }
            total += e;
        }
        let defect = max_abs(&(total - identity(dim)));
        if defect > SPECTRAL_TOL {
            return Err(Error::NotComplete(defect));
        }
        Ok(Self { effects, dim })
    }

    /// Rank-1 POVM with effects `(d/n)|ψ_k⟩⟨ψ_k|`.
    pub fn rank_one(states: &[PureState]) -> Result<Self> {
        let n = states.len();
        let d = states
            .first()
            .map(PureState::dim)
            .ok_or(Error::InvalidArgument("POVM needs at least one effect"))?;
        let weight = d as f64 / n as f64;
        Self::new(states.iter().map(|s| s.projector().scale(weight)).collect())
    }

    pub fn effects(&self) -> &[CMatrix] {
        &self.effects
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of outcomes `n`.
    pub fn outcomes(&self) -> usize {
        self.effects.len()
    }

    /// The POVM with every effect transposed in the computational basis.
    pub fn transpose(&self) -> Povm {
        Povm {
            effects: self.effects.iter().map(CMatrix::transpose).collect(),
            dim: self.dim,
        }
    }
}

/// Where an assembly came from: design name and its declared strength.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceDesign {
    pub name: String,
    pub strength: usize,
    /// The design states, grouped per POVM in assembly order.
    pub states: Vec<Vec<PureState>>,
}

/// `M` POVMs on the same space with the same number of outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementAssembly {
    povms: Vec<Povm>,
    source: Option<SourceDesign>,
}

impl MeasurementAssembly {
    pub fn new(povms: Vec<Povm>) -> Result<Self> {
        let first = povms
            .first()
            .ok_or(Error::InvalidArgument("assembly needs at least one POVM"))?;
        let (d, n) = (first.dim(), first.outcomes());
        for p in &povms {
            if p.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: p.dim(),
                });
            }
            if p.outcomes() != n {
                return Err(Error::InvalidGrouping(alloc::format!(
                    "POVMs have {} and {} outcomes",
                    n,
                    p.outcomes()
                )));
            }
        }
        Ok(Self { povms, source: None })
    }

    /// Attaches the originating design.
    pub fn with_source(mut self, source: SourceDesign) -> Self {
        self.source = Some(source);
        self
    }

    pub fn povms(&self) -> &[Povm] {
        &self.povms
    }

    pub fn source(&self) -> Option<&SourceDesign> {
        self.source.as_ref()
    }

    pub fn source_name(&self) -> Option<&str> {
        self.source.as_ref().map(|s| s.name.as_str())
    }

    /// Declared design strength of the source, if known.
    pub fn strength(&self) -> Option<usize> {
        self.source.as_ref().map(|s| s.strength)
    }

    pub fn dim(&self) -> usize {
        self.povms[0].dim()
    }

    /// Outcomes per POVM.
    pub fn outcomes(&self) -> usize {
        self.povms[0].outcomes()
    }

    /// Number of POVMs `M`.
    pub fn len(&self) -> usize {
        self.povms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.povms.is_empty()
    }

    /// Sum of all effects of all POVMs (equals `M·1`).
    pub fn pooled_effect_sum(&self) -> CMatrix {
        let d = self.dim();
        self.povms
            .iter()
            .flat_map(|p| p.effects())
            .fold(CMatrix::zeros(d, d), |acc, e| acc + e)
    }

    /// Every POVM transposed in the computational basis.
    pub fn transpose(&self) -> MeasurementAssembly {
        MeasurementAssembly {
            povms: self.povms.iter().map(Povm::transpose).collect(),
            source: None,
        }
    }

    /// Applies [`depolarize`] to every POVM.
    pub fn depolarize(&self, eta: f64) -> Result<MeasurementAssembly> {
        Ok(MeasurementAssembly {
            povms: self.povms.iter().map(|p| depolarize(p, eta)).collect::<Result<_>>()?,
            source: None,
        })
    }
}

/// Born-rule probabilities `p_k = tr[E_k ρ]`.
pub fn outcome_distribution(povm: &Povm, rho: &DensityMatrix) -> Result<Vec<f64>> {
    if povm.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: povm.dim(),
            found: rho.dim(),
        });
    }
    povm.effects()
        .iter()
        .map(|e| rho.expectation(e).map(|p| p.max(0.0)))
        .collect()
}

/// Effect-wise noise `A_k ↦ η A_k + (1 - η)·1/d`; needs `n = d`.
pub fn depolarize(povm: &Povm, eta: f64) -> Result<Povm> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidNoise(eta));
    }
    let (d, n) = (povm.dim(), povm.outcomes());
    if n != d {
        return Err(Error::NotNormalizable { n, d });
    }
    let noise = identity(d).scale((1.0 - eta) / d as f64);
    Ok(Povm {
        effects: povm.effects().iter().map(|e| e.scale(eta) + &noise).collect(),
        dim: d,
    })
}
