//! Partitions of `t`, cycle types of `S_t` and exact symmetric-subspace dimensions.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::{Error, Result};

/// Largest `t` handled by the partition and polynomial machinery.
pub const MAX_T: usize = 12;

/// Exact rational type used for class weights and `D_t^d`.
pub type Rational = Ratio<u128>;

/// A partition `λ ⊢ t`, read as a cycle type of `S_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    multiplicities: Vec<usize>,
    class_size: u128,
}

impl Partition {
    /// Builds a partition from its parts (any order).
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let t: usize = parts.iter().sum();
        let mut multiplicities = vec![0; t];
        for &p in &parts {
            multiplicities[p - 1] += 1;
        }
        let class_size = class_size(t, &multiplicities)?;
        Ok(Self {
            parts,
            multiplicities,
            class_size,
        })
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `k_1, …, k_t`, where `k_m` counts the parts equal to `m`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of permutations in `S_t` with this cycle type.
    pub fn class_size(&self) -> u128 {
        self.class_size
    }

    pub fn t(&self) -> usize {
        self.multiplicities.len()
    }

    /// Multiplicity of cycles of length `m` (zero outside `1..=t`).
    pub fn k(&self, m: usize) -> usize {
        if m == 0 {
            0
        } else {
            self.multiplicities.get(m - 1).copied().unwrap_or(0)
        }
    }
}

/// `n!` in 128-bit arithmetic (exact for `n ≤ 34`).
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Binomial coefficient with the multiplicative formula (exact while the result fits).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All partitions of `t`, ascending in lexicographic order of their (non-increasing) parts:
/// `(1,…,1)` first and `(t)` last.
pub fn partitions(t: usize) -> Result<Vec<Partition>> {
    if t == 0 || t > MAX_T {
        return Err(Error::UnsupportedT { t, max: MAX_T });
    }
    let mut raw = Vec::new();
    let mut current = Vec::new();
    collect_partitions(t, t, &mut current, &mut raw);
    // generated in descending lex order
    raw.reverse();
    raw.into_iter().map(Partition::from_parts).collect()
}

fn collect_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        collect_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// `h_λ = t! / Π_m (k_m! · m^{k_m})` for the cycle type `k_1, k_2, …`.
///
/// Trailing entries of `multiplicities` beyond `t` must be zero.
pub fn class_size(t: usize, multiplicities: &[usize]) -> Result<u128> {
    if t == 0 || t > 30 {
        return Err(Error::UnsupportedT { t, max: 30 });
    }
    let weight: usize = multiplicities.iter().enumerate().map(|(i, &k)| (i + 1) * k).sum();
    if weight != t {
        return Err(Error::InconsistentMultiplicities { t, weight });
    }
    let mut denom: u128 = 1;
    for (i, &k) in multiplicities.iter().enumerate() {
        let m = (i + 1) as u128;
        denom *= factorial(k) * m.pow(k as u32);
    }
    Ok(factorial(t) / denom)
}

/// `D_t^d = t!(d-1)!/(t+d-1)! = 1 / C(t+d-1, t)`.
pub fn sym_dim_inverse(t: usize, d: usize) -> Result<Rational> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1"));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1"));
    }
    let dim = binomial(t + d - 1, t);
    if dim == 0 {
        return Err(Error::InvalidArgument("symmetric subspace dimension overflows"));
    }
    Ok(Rational::new(1, dim))
}

/// Converts an exact rational to `f64`.
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
