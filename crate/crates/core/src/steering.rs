//! Entropic steering inequalities and noise thresholds for measurement incompatibility.
//!
//! Alice measures noisy versions `A^η` of a measurement set, Bob the computational-basis
//! transposes of the ideal set, on `|Φ+⟩`. The inequality
//! `Σ_m H_α(B_m|A_m) ≥ q({B_m})` holds whenever Alice's measurements are jointly
//! measurable, with `q` the state-independent Rényi bound at the best feasible `t'`.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::entropy::{conditional_renyi, EntropyOrder, JointDistribution};
use crate::eur::evaluate_bound;
use crate::linalg::{CMatrix, DensityMatrix};
use crate::measurements::{MeasurementAssembly, Povm};
use crate::{Error, Result};

/// Default bisection resolution in `η`.
pub const DEFAULT_RESOLUTION: f64 = 1e-4;

const PRESCAN_POINTS: usize = 21;

/// `p(a, b) = tr[(A_a ⊗ B_b) ρ_AB]`, stored with Bob's outcome `b` as the row index.
pub fn joint_distribution(alice: &Povm, bob: &Povm, shared: &DensityMatrix) -> Result<JointDistribution> {
    let d = alice.dim();
    if bob.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bob.dim(),
        });
    }
    if shared.dim() != d * d {
        return Err(Error::DimensionMismatch {
            expected: d * d,
            found: shared.dim(),
        });
    }
    let (na, nb) = (alice.outcomes(), bob.outcomes());
    let mut table = Vec::with_capacity(na * nb);
    for b in bob.effects() {
        for a in alice.effects() {
            table.push(shared.expectation(&a.kronecker(b))?.max(0.0));
        }
    }
    JointDistribution::new(nb, na, table)
}

/// The same table for `|Φ+⟩`, via `p(a, b) = tr[A_a^T B_b] / d`.
pub fn joint_distribution_phi_plus(alice: &Povm, bob: &Povm) -> Result<JointDistribution> {
    let d = alice.dim();
    if bob.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bob.dim(),
        });
    }
    let overlap = |a: &CMatrix, b: &CMatrix| -> f64 { a.iter().zip(b.iter()).map(|(x, y)| (x * y).re).sum() };
    let table = bob
        .effects()
        .iter()
        .flat_map(|b| alice.effects().iter().map(move |a| (overlap(a, b) / d as f64).max(0.0)))
        .collect();
    JointDistribution::new(bob.outcomes(), alice.outcomes(), table)
}

/// Alice's ideal measurements, Bob's measurements, the shared state and the Rényi order.
#[derive(Debug, Clone, PartialEq)]
pub struct SteeringScenario {
    alice: MeasurementAssembly,
    bob: MeasurementAssembly,
    shared: DensityMatrix,
    alpha: f64,
    bound: f64,
    t_prime: usize,
}

impl SteeringScenario {
    /// Bob measures the transposes of `alice` on `|Φ+⟩`. `alice` must record its source design.
    pub fn maximally_entangled(alice: MeasurementAssembly, alpha: f64) -> Result<Self> {
        if alpha.is_nan() || alpha < 2.0 {
            return Err(Error::NoBoundAvailable(alpha));
        }
        let strength = alice
            .strength()
            .ok_or(Error::InvalidArgument("assembly has no source design"))?;
        let report = evaluate_bound(
            alice.dim(),
            alice.outcomes(),
            alice.len(),
            strength,
            EntropyOrder::Renyi(alpha),
            None,
            None,
        )?;
        let bob = alice.transpose();
        let shared = DensityMatrix::maximally_entangled(alice.dim());
        Ok(Self {
            alice,
            bob,
            shared,
            alpha,
            bound: report.bound,
            t_prime: report.t_prime,
        })
    }

    /// Replaces the shared state.
    pub fn with_shared_state(mut self, shared: DensityMatrix) -> Result<Self> {
        let d = self.alice.dim();
        if shared.dim() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                found: shared.dim(),
            });
        }
        self.shared = shared;
        Ok(self)
    }

    pub fn alice(&self) -> &MeasurementAssembly {
        &self.alice
    }

    pub fn bob(&self) -> &MeasurementAssembly {
        &self.bob
    }

    pub fn shared_state(&self) -> &DensityMatrix {
        &self.shared
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The state-independent bound `q({B_m})`.
    pub fn bound(&self) -> f64 {
        self.bound
    }

    /// `t'` used for [`Self::bound`].
    pub fn t_prime(&self) -> usize {
        self.t_prime
    }

    /// The inequality is violated when the left side drops below the bound.
    pub fn violated(&self, eta: f64) -> Result<bool> {
        Ok(esi_lhs(self, eta)? < self.bound)
    }
}

/// `Σ_m H_α(B_m | A^η_m)`.
pub fn esi_lhs(scenario: &SteeringScenario, eta: f64) -> Result<f64> {
    let noisy = scenario.alice.depolarize(eta)?;
    let mut acc = 0.0;
    for (a, b) in noisy.povms().iter().zip(scenario.bob.povms()) {
        let joint = joint_distribution(a, b, &scenario.shared)?;
        acc += conditional_renyi(&joint, scenario.alpha)?;
    }
    Ok(acc)
}

/// Located noise threshold: violation above `eta_star`, none below.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdResult {
    pub eta_star: f64,
    pub alpha: f64,
    pub bound_used: f64,
    pub t_prime: usize,
    pub resolution: f64,
    /// Whether the pre-scan found the left side monotone (bisection) or not (full grid).
    pub bisected: bool,
}

/// Finds the smallest visibility at which the steering inequality is violated.
pub fn scan_threshold(scenario: &SteeringScenario, resolution: f64) -> Result<ThresholdResult> {
    if !(resolution > 0.0 && resolution < 1.0) {
        return Err(Error::InvalidArgument("resolution must lie in (0, 1)"));
    }
    let gap = |eta: f64| esi_lhs(scenario, eta).map(|lhs| lhs - scenario.bound);
    let result = |eta_star: f64, bisected: bool| ThresholdResult {
        eta_star,
        alpha: scenario.alpha,
        bound_used: scenario.bound,
        t_prime: scenario.t_prime,
        resolution,
        bisected,
    };

    let grid: Vec<f64> = (0..PRESCAN_POINTS)
        .map(|i| i as f64 / (PRESCAN_POINTS - 1) as f64)
        .collect();
    let values = grid.iter().map(|&e| gap(e)).collect::<Result<Vec<f64>>>()?;
    if values[PRESCAN_POINTS - 1] >= 0.0 {
        return Err(Error::NoCrossing(scenario.alpha));
    }
    let monotone = values.windows(2).all(|w| w[1] <= w[0] + 1e-12);

    if monotone {
        let first = values.iter().position(|&v| v < 0.0).expect("last value is negative");
        if first == 0 {
            return Ok(result(0.0, true));
        }
        let (mut lo, mut hi) = (grid[first - 1], grid[first]);
        while hi - lo > resolution {
            let mid = 0.5 * (lo + hi);
            if gap(mid)? < 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return Ok(result(0.5 * (lo + hi), true));
    }

    // full grid: threshold after the last non-violating point
    let steps = (1.0 / resolution).ceil() as usize;
    let mut last_ok = None;
    for i in 0..=steps {
        let eta = (i as f64 * resolution).min(1.0);
        if gap(eta)? >= 0.0 {
            last_ok = Some(eta);
        }
    }
    Ok(match last_ok {
        None => result(0.0, false),
        Some(eta) => result((eta + 0.5 * resolution).min(1.0), false),
    })
}
