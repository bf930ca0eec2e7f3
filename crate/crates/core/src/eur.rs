//! Moment polynomials `F_t(ρ)`, the design moment identity and entropic uncertainty bounds
//! for measurements whose pooled effects form a design.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::combinatorics::{binomial, factorial, partitions, to_f64, Partition, Rational, MAX_T};
use crate::designs::DesignSet;
use crate::entropy::EntropyOrder;
use crate::linalg::DensityMatrix;
use crate::measurements::{outcome_distribution, MeasurementAssembly};
use crate::{Error, Result};

/// Slack allowed above 1 for a computed `F_t` value before it is rejected.
const F_SLACK: f64 = 1e-10;

/// `F_t` as a polynomial in the moments `μ_m = tr ρ^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct FtPolynomial {
    t: usize,
    terms: Vec<(Partition, Rational)>,
}

impl FtPolynomial {
    pub fn t(&self) -> usize {
        self.t
    }

    /// `(λ, h_λ / t!)` in the order of [`partitions`].
    pub fn terms(&self) -> &[(Partition, Rational)] {
        &self.terms
    }

    /// Coefficient of the monomial with the given cycle lengths (any order), if present.
    pub fn coefficient(&self, parts: &[usize]) -> Option<Rational> {
        let mut sorted: Vec<usize> = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        self.terms
            .iter()
            .find(|(p, _)| p.parts() == sorted.as_slice())
            .map(|(_, c)| *c)
    }

    /// Evaluates at `moments[m - 1] = μ_m`; needs at least `t` moments.
    pub fn evaluate(&self, moments: &[f64]) -> Result<f64> {
        if moments.len() < self.t {
            return Err(Error::DimensionMismatch {
                expected: self.t,
                found: moments.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(p, coef)| {
                let monomial: f64 = p.parts().iter().map(|&m| moments[m - 1]).product();
                to_f64(coef) * monomial
            })
            .sum())
    }
}

/// `F_t = (1/t!) Σ_λ h_λ Π_m μ_m^{k_m}` with exact coefficients.
pub fn f_t_polynomial(t: usize) -> Result<FtPolynomial> {
    let t_fact = factorial(t);
    let terms = partitions(t)?
        .into_iter()
        .map(|p| {
            let coef = Rational::new(p.class_size(), t_fact);
            (p, coef)
        })
        .collect();
    Ok(FtPolynomial { t, terms })
}

/// `F_t(ρ) = tr[ρ^{⊗t} P_sym]`, from the moments of `ρ`.
pub fn f_t_rho(rho: &DensityMatrix, t: usize) -> Result<f64> {
    f_t_polynomial(t)?.evaluate(&rho.moments(t))
}

/// Minimum of `F_t` over states on `C^d`, attained by `1/d`:
/// `Π_{k=1}^{t-1} (k + d) / (t! d^{t-1})`.
pub fn f_t_lower_bound(d: usize, t: usize) -> Result<f64> {
    if t == 0 || t > MAX_T {
        return Err(Error::UnsupportedT { t, max: MAX_T });
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1"));
    }
    let d = d as f64;
    Ok((1..t).map(|k| (k as f64 + d) / (d * (k + 1) as f64)).product())
}

/// `Σ_k ⟨ψ_k|ρ|ψ_k⟩^t` over the design states.
pub fn design_moment_sum(design: &DesignSet, rho: &DensityMatrix, t: usize) -> Result<f64> {
    if t > design.declared_t() {
        return Err(Error::StrengthExceeded {
            t,
            strength: design.declared_t(),
        });
    }
    let mut acc = 0.0;
    for psi in design.vectors() {
        acc += psi.expectation(rho)?.powi(t as i32);
    }
    Ok(acc)
}

/// `m · d^{t'} / n^{t'-1} · D_{t'}^d`, exact while it fits in 128 bits.
fn design_factor(d: usize, n: usize, m: usize, t_prime: usize) -> f64 {
    let exact = (d as u128).checked_pow(t_prime as u32).and_then(|num| {
        let num = num.checked_mul(m as u128)?;
        let den = (n as u128)
            .checked_pow(t_prime as u32 - 1)?
            .checked_mul(binomial(t_prime + d - 1, t_prime))?;
        Some(Rational::new(num, den))
    });
    match exact {
        Some(r) => to_f64(&r),
        None => {
            let ln = (m as f64).ln() + t_prime as f64 * (d as f64).ln()
                - (t_prime as f64 - 1.0) * (n as f64).ln()
                - (binomial(t_prime + d - 1, t_prime) as f64).ln();
            ln.exp()
        }
    }
}

fn check_bound_args(d: usize, n: usize, m: usize, t_prime: usize, order: f64, f_value: f64) -> Result<f64> {
    if d == 0 || m == 0 {
        return Err(Error::InvalidArgument("d and M must be positive"));
    }
    if n < d {
        return Err(Error::InvalidArgument("rank-1 POVMs need n >= d"));
    }
    if !(2..=MAX_T).contains(&t_prime) {
        return Err(Error::InvalidTPrime { t_prime, max: MAX_T });
    }
    if order.is_nan() || order <= 1.0 {
        return Err(Error::InvalidOrder(order));
    }
    if order < t_prime as f64 {
        return Err(Error::OrderBelowTPrime { order, t_prime });
    }
    if !(f_value > 0.0 && f_value <= 1.0 + F_SLACK) {
        return Err(Error::InvalidFValue(f_value));
    }
    Ok(f_value.min(1.0))
}

/// Rényi bound `Mα/(t'(1-α)) · ln(d^{t'}/n^{t'-1} · D_{t'}^d · F)`; `α = ∞` allowed.
///
/// `f_value = 1` gives the state-independent bound.
pub fn renyi_bound(d: usize, n: usize, m: usize, t_prime: usize, alpha: f64, f_value: f64) -> Result<f64> {
    let f = check_bound_args(d, n, m, t_prime, alpha, f_value)?;
    let ln_arg = design_factor(d, n, 1, t_prime).ln() + f.ln();
    let prefactor = if alpha.is_infinite() {
        -(m as f64) / t_prime as f64
    } else {
        m as f64 * alpha / (t_prime as f64 * (1.0 - alpha))
    };
    Ok(prefactor * ln_arg)
}

/// Tsallis bound `([d^{t'}/n^{t'-1} · M · D_{t'}^d · F]^{q/t'} - M) / (1 - q)`.
pub fn tsallis_bound(d: usize, n: usize, m: usize, t_prime: usize, q: f64, f_value: f64) -> Result<f64> {
    let f = check_bound_args(d, n, m, t_prime, q, f_value)?;
    if q.is_infinite() {
        return Err(Error::InvalidOrder(q));
    }
    let base = design_factor(d, n, m, t_prime) * f;
    Ok((base.powf(q / t_prime as f64) - m as f64) / (1.0 - q))
}

/// Scans `t' ∈ [2, min(⌊order⌋, t_max)]` maximizing `-ln(base)/t'`, ties to the smaller `t'`.
fn scan_tprime(d: usize, n: usize, m: usize, order: f64, t_max: usize) -> Result<usize> {
    if order.is_nan() || order < 2.0 {
        return Err(Error::NoBoundAvailable(order));
    }
    if t_max < 2 {
        return Err(Error::InvalidTPrime {
            t_prime: t_max,
            max: MAX_T,
        });
    }
    if d == 0 || m == 0 || n < d {
        return Err(Error::InvalidArgument("need d, M >= 1 and n >= d"));
    }
    let by_order = if order.is_infinite() {
        MAX_T
    } else {
        order.floor() as usize
    };
    let upper = by_order.min(t_max).min(MAX_T);
    let score = |tp: usize| -design_factor(d, n, m, tp).ln() / tp as f64;
    let mut best = (2, score(2));
    for tp in 3..=upper {
        let s = score(tp);
        if s > best.1 + 1e-12 * best.1.abs().max(1.0) {
            best = (tp, s);
        }
    }
    Ok(best.0)
}

/// `t'` maximizing the state-independent Rényi bound.
///
/// The order only enters through `t' ≤ α`: the bound is `Mα/(α-1)` times a function of `t'`.
pub fn optimal_tprime(d: usize, n: usize, m: usize, alpha: f64, t_max: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::InvalidArgument("M must be positive"));
    }
    // the logarithm's argument does not involve M
    scan_tprime(d, n, 1, alpha, t_max)
}

/// `t'` maximizing the state-independent Tsallis bound.
pub fn optimal_tprime_tsallis(d: usize, n: usize, m: usize, q: f64, t_max: usize) -> Result<usize> {
    if q.is_infinite() {
        return Err(Error::InvalidOrder(q));
    }
    scan_tprime(d, n, m, q, t_max)
}

/// `Σ_m H(B_m)` for the outcome distributions of every POVM in the assembly.
pub fn lhs_entropy_sum(assembly: &MeasurementAssembly, rho: &DensityMatrix, order: EntropyOrder) -> Result<f64> {
    let mut acc = 0.0;
    for povm in assembly.povms() {
        acc += order.evaluate(&outcome_distribution(povm, rho)?)?;
    }
    Ok(acc)
}

/// An evaluated uncertainty bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub order: EntropyOrder,
    pub t_prime: usize,
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub f_t_value: f64,
    pub bound: f64,
    pub state_dependent: bool,
}

/// Bound for `M` rank-1 `n`-outcome POVMs on `C^d` whose effects form a `strength`-design.
///
/// Without `t_prime` the optimal feasible value is used; with `rho` the bound is state dependent.
pub fn evaluate_bound(
    d: usize,
    n: usize,
    m: usize,
    strength: usize,
    order: EntropyOrder,
    t_prime: Option<usize>,
    rho: Option<&DensityMatrix>,
) -> Result<BoundReport> {
    let value = match order {
        EntropyOrder::Renyi(a) | EntropyOrder::Tsallis(a) => a,
        EntropyOrder::Shannon => return Err(Error::NoBoundAvailable(1.0)),
    };
    if value.is_nan() || value < 2.0 {
        return Err(Error::NoBoundAvailable(value));
    }
    let t_max = strength.min(MAX_T);
    let tp = match t_prime {
        Some(tp) if tp > strength => return Err(Error::StrengthExceeded { t: tp, strength }),
        Some(tp) => tp,
        None => match order {
            EntropyOrder::Tsallis(q) => optimal_tprime_tsallis(d, n, m, q, t_max)?,
            _ => optimal_tprime(d, n, m, value, t_max)?,
        },
    };
    let f_t_value = match rho {
        Some(r) => {
            if r.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: r.dim(),
                });
            }
            f_t_rho(r, tp)?
        }
        None => 1.0,
    };
    let bound = match order {
        EntropyOrder::Tsallis(q) => tsallis_bound(d, n, m, tp, q, f_t_value)?,
        _ => renyi_bound(d, n, m, tp, value, f_t_value)?,
    };
    Ok(BoundReport {
        order,
        t_prime: tp,
        m,
        n,
        d,
        f_t_value,
        bound,
        state_dependent: rho.is_some(),
    })
}

/// [`evaluate_bound`] for an assembly that records its source design.
pub fn assembly_bound(
    assembly: &MeasurementAssembly,
    order: EntropyOrder,
    t_prime: Option<usize>,
    rho: Option<&DensityMatrix>,
) -> Result<BoundReport> {
    let strength = assembly
        .strength()
        .ok_or(Error::InvalidArgument("assembly has no source design"))?;
    evaluate_bound(
        assembly.dim(),
        assembly.outcomes(),
        assembly.len(),
        strength,
        order,
        t_prime,
        rho,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{catalog, partition_into_povms, single_povm};
    use crate::linalg::PureState;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::LN_2;

    /// Printed polynomials: `(numerator, cycle lengths ≥ 2)` over `t!`.
    fn printed(t: usize) -> Vec<(u128, Vec<usize>)> {
        use alloc::vec;
        match t {
            2 => vec![(1, vec![]), (1, vec![2])],
            3 => vec![(1, vec![]), (3, vec![2]), (2, vec![3])],
            4 => vec![(1, vec![]), (6, vec![2]), (3, vec![2, 2]), (8, vec![3]), (6, vec![4])],
            5 => vec![
                (1, vec![]),
                (15, vec![2, 2]),
                (20, vec![3, 2]),
                (10, vec![2]),
                (20, vec![3]),
                (30, vec![4]),
                (24, vec![5]),
            ],
            6 => vec![
                (1, vec![]),
                (15, vec![2, 2, 2]),
                (45, vec![2, 2]),
                (120, vec![3, 2]),
                (90, vec![4, 2]),
                (15, vec![2]),
                (40, vec![3, 3]),
                (40, vec![3]),
                (90, vec![4]),
                (144, vec![5]),
                (120, vec![6]),
            ],
            7 => vec![
                (1, vec![]),
                (21, vec![2]),
                (105, vec![2, 2]),
                (105, vec![2, 2, 2]),
                (70, vec![3]),
                (420, vec![2, 3]),
                (210, vec![2, 2, 3]),
                (280, vec![3, 3]),
                (210, vec![4]),
                (630, vec![2, 4]),
                (420, vec![3, 4]),
                (504, vec![5]),
                (504, vec![2, 5]),
                (840, vec![6]),
                (720, vec![7]),
            ],
            _ => unreachable!(),
        }
    }

    #[test]
    fn polynomials_match_printed_tables() {
        for t in 2..=7 {
            let poly = f_t_polynomial(t).unwrap();
            let table = printed(t);
            assert_eq!(poly.terms().len(), table.len(), "t={t}");
            for (num, cycles) in table {
                let fixed: usize = t - cycles.iter().sum::<usize>();
                let mut parts = cycles.clone();
                parts.extend(core::iter::repeat(1).take(fixed));
                assert_eq!(
                    poly.coefficient(&parts),
                    Some(Rational::new(num, factorial(t))),
                    "t={t} {cycles:?}"
                );
            }
        }
    }

    #[test]
    fn coefficients_sum_to_one() {
        for t in 1..=MAX_T {
            let poly = f_t_polynomial(t).unwrap();
            let sum = poly.terms().iter().fold(Rational::new(0, 1), |acc, (_, c)| acc + c);
            assert_eq!(sum, Rational::new(1, 1));
        }
        assert_eq!(f_t_polynomial(1).unwrap().terms().len(), 1);
    }

    #[test]
    fn f_t_examples() {
        let psi = PureState::basis(3, 1).unwrap();
        for t in 1..=MAX_T {
            assert_abs_diff_eq!(
                f_t_rho(&DensityMatrix::from_pure(&psi), t).unwrap(),
                1.0,
                epsilon = 1e-12
            );
        }
        let rho = DensityMatrix::qubit_mixture(0.3).unwrap();
        let purity = rho.moment(2).unwrap();
        assert_abs_diff_eq!(f_t_rho(&rho, 2).unwrap(), (1.0 + purity) / 2.0, epsilon = 1e-15);
        let mixed = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(f_t_rho(&mixed, 3).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(f_t_lower_bound(2, 3).unwrap(), 0.5, epsilon = 1e-15);
        for d in 1..6 {
            for t in 1..=8 {
                let lb = f_t_lower_bound(d, t).unwrap();
                assert_abs_diff_eq!(
                    f_t_rho(&DensityMatrix::maximally_mixed(d), t).unwrap(),
                    lb,
                    epsilon = 1e-12
                );
            }
        }
        assert!(matches!(f_t_rho(&mixed, 13), Err(Error::UnsupportedT { .. })));
    }

    #[test]
    fn moment_identity_on_octahedron() {
        let octa = catalog("octahedron").unwrap();
        let mixed = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(design_moment_sum(&octa, &mixed, 3).unwrap(), 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(design_moment_sum(&octa, &mixed, 1).unwrap(), 3.0, epsilon = 1e-15);
        assert!(matches!(
            design_moment_sum(&octa, &mixed, 4),
            Err(Error::StrengthExceeded { .. })
        ));
    }

    #[test]
    fn qubit_closed_forms() {
        // three MUBs: 3α/(2(1-α)) ln(2/3) for 2 ≤ α < 3, α/(1-α) ln(1/2) from 3 on
        for alpha in [2.0, 2.5, 2.99] {
            let closed = 3.0 * alpha / (2.0 * (1.0 - alpha)) * (2.0f64 / 3.0).ln();
            assert_abs_diff_eq!(renyi_bound(2, 2, 3, 2, alpha, 1.0).unwrap(), closed, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(
            renyi_bound(2, 2, 3, 2, 2.0, 1.0).unwrap(),
            3.0 * 1.5f64.ln(),
            epsilon = 1e-12
        );
        for alpha in [3.0, 4.0, 10.0] {
            let closed = alpha / (1.0 - alpha) * 0.5f64.ln();
            assert_abs_diff_eq!(renyi_bound(2, 2, 3, 3, alpha, 1.0).unwrap(), closed, epsilon = 1e-12);
        }
        // six icosahedron measurements: 3α/(1-α) ln(2/3), then 2α/(1-α) ln(1/2)
        let closed = 2.0 * 3.0 / (1.0 - 3.0) * 0.5f64.ln();
        assert_abs_diff_eq!(renyi_bound(2, 2, 6, 3, 3.0, 1.0).unwrap(), closed, epsilon = 1e-12);
        assert_abs_diff_eq!(closed, 3.0 * LN_2, epsilon = 1e-15);
        let closed = 3.0 * 2.5 / (1.0 - 2.5) * (2.0f64 / 3.0).ln();
        assert_abs_diff_eq!(renyi_bound(2, 2, 6, 2, 2.5, 1.0).unwrap(), closed, epsilon = 1e-12);
    }

    #[test]
    fn seven_design_renyi_form() {
        for tp in 2..=7usize {
            let t = tp as f64;
            let alpha = t + 0.5;
            let closed =
                alpha / ((alpha - 1.0) * t) * ((t + 1.0) / (2f64.powf(3.0 - 2.0 * t) * 3f64.powf(1.0 - t))).ln();
            let general = renyi_bound(2, 24, 1, tp, alpha, 1.0).unwrap();
            assert_abs_diff_eq!(general, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn tsallis_closed_forms() {
        assert_abs_diff_eq!(tsallis_bound(2, 2, 3, 2, 2.0, 1.0).unwrap(), 1.0, epsilon = 1e-15);
        for q in [2.0, 2.5] {
            let closed = (2f64.powf(q / 2.0) - 3.0) / (1.0 - q);
            assert_abs_diff_eq!(tsallis_bound(2, 2, 3, 2, q, 1.0).unwrap(), closed, epsilon = 1e-12);
        }
        for q in [3.0, 5.0] {
            let closed = (1.5f64.powf(q / 3.0) - 3.0) / (1.0 - q);
            assert_abs_diff_eq!(tsallis_bound(2, 2, 3, 3, q, 1.0).unwrap(), closed, epsilon = 1e-12);
        }
        for tp in 2..=5usize {
            let q = tp as f64 + 0.25;
            let ratio = 12.0 * factorial(tp) as f64 / factorial(tp + 1) as f64;
            let closed = (ratio.powf(q / tp as f64) - 6.0) / (1.0 - q);
            assert_abs_diff_eq!(tsallis_bound(2, 2, 6, tp, q, 1.0).unwrap(), closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn seven_design_tsallis_form() {
        // the general evaluator drops the stray 2^{q/t'} of the printed display
        for tp in 2..=7usize {
            let t = tp as f64;
            let q = t + 1.0;
            let inner = 2f64.powf(3.0 - 2.0 * t) * 3f64.powf(1.0 - t) / (t + 1.0);
            let general = tsallis_bound(2, 24, 1, tp, q, 1.0).unwrap();
            assert_abs_diff_eq!(general, (inner.powf(q / t) - 1.0) / (1.0 - q), epsilon = 1e-12);
            let printed = (2f64.powf(q / t) * inner.powf(q / t) - 1.0) / (1.0 - q);
            assert!(printed < general);
        }
        // pure-state tightness at q = t' = 2: Σ p² over the 24 outcomes is 1/18
        assert_abs_diff_eq!(
            tsallis_bound(2, 24, 1, 2, 2.0, 1.0).unwrap(),
            1.0 - 1.0 / 18.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn bound_argument_errors() {
        assert!(matches!(
            renyi_bound(2, 2, 3, 3, 2.5, 1.0),
            Err(Error::OrderBelowTPrime { .. })
        ));
        assert!(matches!(renyi_bound(2, 2, 3, 2, 1.0, 1.0), Err(Error::InvalidOrder(_))));
        assert!(matches!(
            renyi_bound(2, 2, 3, 1, 2.0, 1.0),
            Err(Error::InvalidTPrime { .. })
        ));
        assert!(matches!(
            renyi_bound(2, 2, 3, 2, 2.0, 0.0),
            Err(Error::InvalidFValue(_))
        ));
        assert!(matches!(
            renyi_bound(2, 2, 3, 2, 2.0, 1.5),
            Err(Error::InvalidFValue(_))
        ));
        assert!(matches!(
            optimal_tprime(2, 2, 3, 1.5, 3),
            Err(Error::NoBoundAvailable(_))
        ));
        let inf = renyi_bound(2, 2, 3, 3, f64::INFINITY, 1.0).unwrap();
        assert_abs_diff_eq!(inf, LN_2, epsilon = 1e-15);
    }

    #[test]
    fn optimal_tprime_examples() {
        assert_eq!(optimal_tprime(2, 2, 3, 50.0, 12).unwrap(), 3);
        assert_eq!(optimal_tprime(2, 2, 3, f64::INFINITY, 3).unwrap(), 3);
        for t_max in 2..=12 {
            assert_eq!(optimal_tprime(2, 2, 3, 2.0, t_max).unwrap(), 2);
            assert_eq!(optimal_tprime(5, 5, 6, 2.9, t_max).unwrap(), 2);
        }
        assert_eq!(optimal_tprime(2, 2, 3, 2.99, 3).unwrap(), 2);
        assert_eq!(optimal_tprime(2, 2, 3, 3.0, 3).unwrap(), 3);
        // optimum does not depend on α once α is past it
        let reference = optimal_tprime(3, 3, 4, 12.0, 12).unwrap();
        for alpha in [13.0, 20.0, 1e6, f64::INFINITY] {
            assert_eq!(optimal_tprime(3, 3, 4, alpha, 12).unwrap(), reference);
        }
    }

    #[test]
    fn assembly_bounds() {
        let pauli = partition_into_povms(&catalog("octahedron").unwrap()).unwrap();
        let r = assembly_bound(&pauli, EntropyOrder::Renyi(2.0), None, None).unwrap();
        assert_eq!(r.t_prime, 2);
        assert_abs_diff_eq!(r.bound, 3.0 * 1.5f64.ln(), epsilon = 1e-12);
        let r = assembly_bound(&pauli, EntropyOrder::Renyi(7.0), None, None).unwrap();
        assert_eq!(r.t_prime, 3);
        let t = assembly_bound(&pauli, EntropyOrder::Tsallis(2.0), None, None).unwrap();
        assert_abs_diff_eq!(t.bound, 1.0, epsilon = 1e-15);
        assert!(matches!(
            assembly_bound(&pauli, EntropyOrder::Renyi(1.5), None, None),
            Err(Error::NoBoundAvailable(_))
        ));
        assert!(matches!(
            assembly_bound(&pauli, EntropyOrder::Renyi(5.0), Some(4), None),
            Err(Error::StrengthExceeded { .. })
        ));
        let seven = single_povm(&catalog("snub-cube-7design").unwrap()).unwrap();
        let r = assembly_bound(&seven, EntropyOrder::Renyi(f64::INFINITY), None, None).unwrap();
        assert_eq!(r.t_prime, 7);
        let mixed = DensityMatrix::maximally_mixed(2);
        let r = assembly_bound(&pauli, EntropyOrder::Renyi(3.0), None, Some(&mixed)).unwrap();
        assert!(r.state_dependent);
        assert_abs_diff_eq!(r.f_t_value, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn lhs_examples() {
        let pauli = partition_into_povms(&catalog("octahedron").unwrap()).unwrap();
        let zero = DensityMatrix::from_pure(&PureState::basis(2, 0).unwrap());
        let lhs = lhs_entropy_sum(&pauli, &zero, EntropyOrder::Renyi(2.0)).unwrap();
        assert_abs_diff_eq!(lhs, 2.0 * LN_2, epsilon = 1e-14);
        let icosa = partition_into_povms(&catalog("icosahedron").unwrap()).unwrap();
        let mixed = DensityMatrix::maximally_mixed(2);
        let lhs = lhs_entropy_sum(&icosa, &mixed, EntropyOrder::Renyi(3.0)).unwrap();
        assert_abs_diff_eq!(lhs, 6.0 * LN_2, epsilon = 1e-13);
    }
}
