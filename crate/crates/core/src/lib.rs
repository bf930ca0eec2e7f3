//! Quantum designs, entropic uncertainty relations and entropic steering tests.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure numerics:
//!
//! - [`linalg`]: pure states, density matrices, Bloch vectors and trace moments.
//! - [`combinatorics`]: partitions of `t`, conjugacy-class sizes of `S_t` and the
//!   inverse symmetric-subspace dimension `D_t^d`.
//! - [`designs`]: the qubit polyhedra and prime-dimension MUB catalog, frame-potential
//!   verification and grouping of design states into rank-1 POVMs.
//! - [`measurements`]: POVMs, outcome statistics and depolarizing noise.
//! - [`entropy`]: Rényi, Tsallis, Shannon and conditional Rényi entropies.
//! - [`eur`]: the moment polynomial `F_t(ρ)`, design moment sums and the Rényi/Tsallis
//!   uncertainty bounds with their `t'` optimization.
//! - [`steering`]: entropic steering inequalities and noise-threshold scans.
//! - [`haar`]: seeded Haar-random sampling used as an independent oracle.
//!
//! File formats, CSV output and the command-line tool live in the `qdesign` crate.

#![no_std]
#![forbid(unsafe_code)]
// `!(x > y)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod combinatorics;
pub mod designs;
pub mod entropy;
mod error;
pub mod eur;
pub mod haar;
pub mod linalg;
pub mod measurements;
pub mod steering;

pub use error::{Error, Result};
