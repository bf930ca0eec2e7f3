//! Rényi, Tsallis, Shannon and conditional Rényi entropies (natural logarithm).
//!
//! `0·ln 0` is taken as `0`. Inputs must already be normalized to within `1e-10`;
//! nothing is silently renormalized.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Normalization tolerance for probability vectors and joint tables.
pub const NORMALIZATION_TOL: f64 = 1e-10;

/// Entropy family and order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntropyOrder {
    Renyi(f64),
    Tsallis(f64),
    Shannon,
}

impl EntropyOrder {
    pub fn renyi(alpha: f64) -> Result<Self> {
        check_order(alpha)?;
        Ok(Self::Renyi(alpha))
    }

    pub fn tsallis(q: f64) -> Result<Self> {
        check_order(q)?;
        Ok(Self::Tsallis(q))
    }

    /// The order, absent for Shannon entropy.
    pub fn order(&self) -> Option<f64> {
        match *self {
            Self::Renyi(a) | Self::Tsallis(a) => Some(a),
            Self::Shannon => None,
        }
    }

    pub fn evaluate(&self, p: &[f64]) -> Result<f64> {
        match *self {
            Self::Renyi(a) => renyi(p, a),
            Self::Tsallis(q) => tsallis(p, q),
            Self::Shannon => shannon(p),
        }
    }
}

fn check_order(order: f64) -> Result<()> {
    if order.is_nan() || order <= 0.0 || order == 1.0 {
        Err(Error::InvalidOrder(order))
    } else {
        Ok(())
    }
}

fn check_distribution(p: &[f64]) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::Unnormalized(0.0));
    }
    let mut sum = 0.0;
    for &x in p {
        if !(x >= -NORMALIZATION_TOL) {
            return Err(Error::NegativeProbability(x));
        }
        sum += x;
    }
    if (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::Unnormalized(sum));
    }
    Ok(sum)
}

/// `Σ p_k^a - 1`, accurate when `a` is close to 1.
fn power_sum_minus_one(p: &[f64], a: f64, sum: f64) -> f64 {
    let mut acc = sum - 1.0;
    for &x in p {
        if x > 0.0 {
            acc += x * ((a - 1.0) * x.ln()).exp_m1();
        }
    }
    acc
}

/// `H_α = ln(Σ p_k^α) / (1 - α)`; `α = ∞` gives the min-entropy.
pub fn renyi(p: &[f64], alpha: f64) -> Result<f64> {
    check_order(alpha)?;
    let sum = check_distribution(p)?;
    if alpha.is_infinite() {
        let max = p.iter().copied().fold(0.0, f64::max);
        return Ok(-max.ln());
    }
    let shifted = power_sum_minus_one(p, alpha, sum);
    let ln_sum = if shifted < -0.5 {
        // far below 1 the shifted sum has cancelled digits
        p.iter().filter(|&&x| x > 0.0).map(|&x| x.powf(alpha)).sum::<f64>().ln()
    } else {
        shifted.ln_1p()
    };
    Ok(ln_sum / (1.0 - alpha))
}

/// `T_q = (Σ p_k^q - 1) / (1 - q)`.
pub fn tsallis(p: &[f64], q: f64) -> Result<f64> {
    check_order(q)?;
    if q.is_infinite() {
        return Err(Error::InvalidOrder(q));
    }
    let sum = check_distribution(p)?;
    Ok(power_sum_minus_one(p, q, sum) / (1.0 - q))
}

/// `S = -Σ p_k ln p_k`.
pub fn shannon(p: &[f64]) -> Result<f64> {
    check_distribution(p)?;
    Ok(-p.iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()).sum::<f64>())
}

/// `f_r(x) = ln(1 + (1 - r)x) / (1 - r)`, mapping `T_r` to `H_r`.
pub fn convert_tsallis_to_renyi(value: f64, r: f64) -> Result<f64> {
    if !(r > 1.0) {
        return Err(Error::InvalidOrder(r));
    }
    let arg = (1.0 - r) * value;
    if !(arg > -1.0) {
        return Err(Error::LogDomain(1.0 + arg));
    }
    Ok(arg.ln_1p() / (1.0 - r))
}

/// A joint distribution `p(x, y)` stored row-major with `x` as the row index.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    table: Vec<f64>,
    nx: usize,
    ny: usize,
}

impl JointDistribution {
    pub fn new(nx: usize, ny: usize, table: Vec<f64>) -> Result<Self> {
        if nx == 0 || ny == 0 || table.len() != nx * ny {
            return Err(Error::DimensionMismatch {
                expected: nx * ny,
                found: table.len(),
            });
        }
        check_distribution(&table)?;
        Ok(Self { table, nx, ny })
    }

    /// `p(x) p(y)`.
    pub fn product(px: &[f64], py: &[f64]) -> Result<Self> {
        check_distribution(px)?;
        check_distribution(py)?;
        let table = px.iter().flat_map(|&a| py.iter().map(move |&b| a * b)).collect();
        Self::new(px.len(), py.len(), table)
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.table[x * self.ny + y]
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn marginal_x(&self) -> Vec<f64> {
        (0..self.nx)
            .map(|x| (0..self.ny).map(|y| self.get(x, y)).sum())
            .collect()
    }

    pub fn marginal_y(&self) -> Vec<f64> {
        (0..self.ny)
            .map(|y| (0..self.nx).map(|x| self.get(x, y)).sum())
            .collect()
    }

    /// Column `p(·, y)`.
    pub fn column(&self, y: usize) -> Vec<f64> {
        (0..self.nx).map(|x| self.get(x, y)).collect()
    }
}

/// `H_α(X|Y) = α/(1-α) · ln Σ_y p_y ‖p_{x|y}‖_α` for `α > 1`.
///
/// Since `p_y ‖p_{·|y}‖_α = ‖p(·, y)‖_α`, outcomes with `p_y = 0` drop out.
pub fn conditional_renyi(joint: &JointDistribution, alpha: f64) -> Result<f64> {
    if !(alpha > 1.0) {
        return Err(Error::InvalidOrder(alpha));
    }
    let mut acc = 0.0;
    for y in 0..joint.ny() {
        let col = joint.column(y);
        acc += if alpha.is_infinite() {
            col.iter().copied().fold(0.0, f64::max)
        } else {
            col.iter()
                .map(|&p| p.max(0.0).powf(alpha))
                .sum::<f64>()
                .powf(1.0 / alpha)
        };
    }
    if !(acc > 0.0) {
        return Err(Error::LogDomain(acc));
    }
    let prefactor = if alpha.is_infinite() {
        -1.0
    } else {
        alpha / (1.0 - alpha)
    };
    Ok(prefactor * acc.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::LN_2;

    #[test]
    fn renyi_examples() {
        let u4 = [0.25; 4];
        for a in [0.5, 2.0, 3.0, 7.5] {
            assert_abs_diff_eq!(renyi(&u4, a).unwrap(), 4f64.ln(), epsilon = 1e-14);
        }
        assert_abs_diff_eq!(renyi(&[1.0, 0.0, 0.0], 2.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(renyi(&[0.5, 0.5], 2.0).unwrap(), LN_2, epsilon = 1e-15);
        assert!(matches!(renyi(&[0.5, 0.5], 1.0), Err(Error::InvalidOrder(_))));
        assert!(matches!(renyi(&[0.5, 0.6], 2.0), Err(Error::Unnormalized(_))));
        assert!(matches!(renyi(&[1.5, -0.5], 2.0), Err(Error::NegativeProbability(_))));
    }

    #[test]
    fn tsallis_examples() {
        assert_abs_diff_eq!(tsallis(&[0.5, 0.5], 2.0).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(tsallis(&[0.0, 1.0], 3.0).unwrap(), 0.0, epsilon = 1e-15);
        for n in 2..10 {
            let u = vec![1.0 / n as f64; n];
            assert_abs_diff_eq!(tsallis(&u, 2.0).unwrap(), 1.0 - 1.0 / n as f64, epsilon = 1e-14);
        }
    }

    #[test]
    fn conversion_examples() {
        assert_abs_diff_eq!(convert_tsallis_to_renyi(0.0, 3.0).unwrap(), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(convert_tsallis_to_renyi(0.5, 2.0).unwrap(), LN_2, epsilon = 1e-15);
        let p = [0.1, 0.25, 0.3, 0.05, 0.3];
        let t = tsallis(&p, 3.0).unwrap();
        assert_abs_diff_eq!(
            convert_tsallis_to_renyi(t, 3.0).unwrap(),
            renyi(&p, 3.0).unwrap(),
            epsilon = 1e-12
        );
        assert!(matches!(convert_tsallis_to_renyi(2.0, 2.0), Err(Error::LogDomain(_))));
        assert!(matches!(
            convert_tsallis_to_renyi(0.1, 0.5),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn conditional_examples() {
        let prod = JointDistribution::product(&[0.5, 0.5], &[0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(conditional_renyi(&prod, 2.0).unwrap(), LN_2, epsilon = 1e-15);
        assert_abs_diff_eq!(conditional_renyi(&prod, 3.5).unwrap(), LN_2, epsilon = 1e-14);

        let diag = JointDistribution::new(2, 2, vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        assert_abs_diff_eq!(conditional_renyi(&diag, 2.0).unwrap(), 0.0, epsilon = 1e-15);

        // y = 0: x deterministic; y = 1: x uniform; p_y = (1/2, 1/2)
        let mixed = JointDistribution::new(2, 2, vec![0.5, 0.25, 0.0, 0.25]).unwrap();
        let by_hand = {
            // Σ_y p_y (Σ_x p(x|y)^2)^{1/2}
            let s = 0.5 * (1.0f64).sqrt() + 0.5 * (0.25f64 + 0.25).sqrt();
            -2.0 * s.ln()
        };
        assert_abs_diff_eq!(by_hand, 0.316_694_367_640_75, epsilon = 1e-13);
        assert_abs_diff_eq!(conditional_renyi(&mixed, 2.0).unwrap(), by_hand, epsilon = 1e-14);
        assert!(matches!(conditional_renyi(&mixed, 1.0), Err(Error::InvalidOrder(_))));
        assert!(matches!(conditional_renyi(&mixed, 0.5), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn shannon_limit() {
        let p = [0.2, 0.5, 0.3];
        let s = shannon(&p).unwrap();
        let lo = renyi(&p, 1.0 + 1e-6).unwrap();
        let hi = renyi(&p, 1.0 - 1e-6).unwrap();
        assert!(lo <= s + 1e-12 && s <= hi + 1e-12);
        assert_abs_diff_eq!(lo, s, epsilon = 1e-4);
        assert_abs_diff_eq!(hi, s, epsilon = 1e-4);
    }

    #[test]
    fn small_power_sums_keep_precision() {
        let p = [1.0 / 24.0; 24];
        assert_abs_diff_eq!(renyi(&p, 7.0).unwrap(), 24f64.ln(), epsilon = 1e-14);
        assert_abs_diff_eq!(renyi(&p, 40.0).unwrap(), 24f64.ln(), epsilon = 1e-14);
    }

    #[test]
    fn min_entropy() {
        assert_abs_diff_eq!(
            renyi(&[0.7, 0.3], f64::INFINITY).unwrap(),
            -(0.7f64).ln(),
            epsilon = 1e-15
        );
    }
}
