use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::DesignSet;
use crate::linalg::{c, BlochVector, PureState};
use crate::{Error, Result};

/// Fixed catalog entries (besides the `mub-d{p}` family).
pub const CATALOG_NAMES: [&str; 5] = [
    "octahedron",
    "icosahedron",
    "icosidodecahedron",
    "snub-cube-regular",
    "snub-cube-7design",
];

/// Unit seed `(1, 1/τ, τ)/‖·‖` of the regular snub cube, `τ` the tribonacci constant.
pub const REGULAR_SNUB_SEED: [f64; 3] = [
    0.462_320_627_817_656_3,
    0.251_358_645_685_362_4,
    0.850_340_207_407_310_9,
];

/// Seed of the 24-point deformed snub cube. Its squared coordinates are the roots of
/// `u³ - u² + u/5 - 1/105`, which zeroes the octahedral invariants of degree 4 and 6.
pub const DEFORMED_SNUB_SEED: [f64; 3] = [
    0.422_518_653_761_111_53,
    0.266_635_401_516_704_72,
    0.866_246_818_107_820_6,
];

const MAX_MUB_PRIME: usize = 47;

/// Looks up a named design: `octahedron`, `icosahedron`, `icosidodecahedron`,
/// `snub-cube-regular`, `snub-cube-7design` or `mub-d{p}` for a prime `p ≤ 47`.
pub fn catalog(name: &str) -> Result<DesignSet> {
    let (vectors, t) = match name {
        "octahedron" => (bloch_states(&octahedron_points())?, 3),
        "icosahedron" => (bloch_states(&icosahedron_points())?, 5),
        "icosidodecahedron" => (bloch_states(&icosidodecahedron_points())?, 5),
        "snub-cube-regular" => (bloch_states(&octahedral_orbit(REGULAR_SNUB_SEED))?, 3),
        "snub-cube-7design" => (bloch_states(&octahedral_orbit(DEFORMED_SNUB_SEED))?, 7),
        other => match other.strip_prefix("mub-d").and_then(|p| p.parse::<usize>().ok()) {
            Some(p) if is_prime(p) && p <= MAX_MUB_PRIME => (mub_states(p)?, 2),
            _ => return Err(Error::UnknownDesign(String::from(other))),
        },
    };
    DesignSet::unverified(name, vectors, t)
}

fn bloch_states(points: &[[f64; 3]]) -> Result<Vec<PureState>> {
    points
        .iter()
        .map(|&[x, y, z]| BlochVector::new(x, y, z).normalized()?.to_state())
        .collect()
}

fn octahedron_points() -> Vec<[f64; 3]> {
    alloc::vec![
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ]
}

/// Poles plus two staggered pentagonal rings at `z = ±1/√5`.
fn icosahedron_points() -> Vec<[f64; 3]> {
    let z = 1.0 / 5f64.sqrt();
    let r = 2.0 / 5f64.sqrt();
    let mut pts = alloc::vec![[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]];
    for k in 0..5 {
        let phi = 2.0 * PI * k as f64 / 5.0;
        pts.push([r * phi.cos(), r * phi.sin(), z]);
    }
    for k in 0..5 {
        let phi = 2.0 * PI * k as f64 / 5.0 + PI / 5.0;
        pts.push([r * phi.cos(), r * phi.sin(), -z]);
    }
    pts
}

/// Normalized midpoints of the 30 icosahedron edges.
fn icosidodecahedron_points() -> Vec<[f64; 3]> {
    let ico = icosahedron_points();
    // nearest neighbours have dot product 1/√5
    let edge_dot = 1.0 / 5f64.sqrt();
    let mut pts = Vec::with_capacity(30);
    for i in 0..ico.len() {
        for j in (i + 1)..ico.len() {
            let dot: f64 = (0..3).map(|k| ico[i][k] * ico[j][k]).sum();
            if (dot - edge_dot).abs() < 1e-9 {
                pts.push([ico[i][0] + ico[j][0], ico[i][1] + ico[j][1], ico[i][2] + ico[j][2]]);
            }
        }
    }
    pts
}

/// The 24 proper rotations of the cube: signed permutation matrices with determinant +1.
fn octahedral_rotations() -> Vec<[[f64; 3]; 3]> {
    const PERMS: [([usize; 3], i32); 6] = [
        ([0, 1, 2], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ];
    let mut out = Vec::with_capacity(24);
    for (perm, parity) in PERMS {
        for signs in 0..8u8 {
            let s = [
                if signs & 1 == 0 { 1 } else { -1 },
                if signs & 2 == 0 { 1 } else { -1 },
                if signs & 4 == 0 { 1 } else { -1 },
            ];
            if parity * s[0] * s[1] * s[2] != 1 {
                continue;
            }
            let mut m = [[0.0; 3]; 3];
            for row in 0..3 {
                m[row][perm[row]] = s[row] as f64;
            }
            out.push(m);
        }
    }
    out
}

fn octahedral_orbit(seed: [f64; 3]) -> Vec<[f64; 3]> {
    octahedral_rotations()
        .iter()
        .map(|m| {
            let mut v = [0.0; 3];
            for (row, out) in v.iter_mut().enumerate() {
                *out = (0..3).map(|k| m[row][k] * seed[k]).sum();
            }
            v
        })
        .collect()
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0)
}

/// The `p + 1` mutually unbiased bases of `C^p`, basis by basis.
///
/// For odd primes: the computational basis and `p^{-1/2} Σ_j ω^{a j² + b j}|j⟩`,
/// `a, b ∈ Z_p`. For `p = 2` the three Pauli eigenbases.
pub fn mub_states(p: usize) -> Result<Vec<PureState>> {
    if !is_prime(p) {
        return Err(Error::UnknownDesign(format!("mub-d{p}")));
    }
    if p == 2 {
        return bloch_states(&octahedron_points());
    }
    let mut out = Vec::with_capacity(p * (p + 1));
    for k in 0..p {
        out.push(PureState::basis(p, k)?);
    }
    let amp = 1.0 / (p as f64).sqrt();
    for a in 0..p {
        for b in 0..p {
            let v = (0..p)
                .map(|j| {
                    let phase = 2.0 * PI * ((a * j * j + b * j) % p) as f64 / p as f64;
                    c(amp * phase.cos(), amp * phase.sin())
                })
                .collect();
            out.push(PureState::normalized(v)?);
        }
    }
    Ok(out)
}
