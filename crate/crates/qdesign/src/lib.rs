//! File formats, figure data, parallel sampling and the command-line front end for
//! [`qdesign_core`].
//!
//! - [`io`]: design and state files (JSON).
//! - [`figures`]: CSV tables behind the published figures.
//! - [`manifest`]: run manifests written next to every data file.
//! - [`parallel`]: Haar estimates spread over a rayon pool.
//! - [`cli`]: the `qdesign` binary.

#![forbid(unsafe_code)]

pub mod cli;
pub mod figures;
pub mod io;
pub mod manifest;
pub mod parallel;
