//! Grid data behind the published figures, as CSV.
//!
//! | id      | content |
//! |---------|---------|
//! | `fig2a` | `F_t(ρ̃(p))` for `t = 1..7`, `p = 0, 0.01, …, 1` |
//! | `fig2b` | optimal `t'` against `d` for projective measurements (`n = d`, `α → ∞`) |
//! | `fig2c` | optimal `t'` for one rank-1 POVM over `n ∈ {2, 5, 10, …, 100}`, `d = 1..50` |
//! | `fig3a` | icosahedron Rényi bound against `α` for `t' = 2..5` |
//! | `fig3b` | 7-design POVM Rényi bound against `α` for `t' = 2..7` |
//!
//! Reals are written with 12 significant digits in exponent form; infeasible cells are empty.

use std::fmt;
use std::str::FromStr;

use qdesign_core::combinatorics::MAX_T;
use qdesign_core::eur::{f_t_rho, optimal_tprime, renyi_bound};
use qdesign_core::linalg::DensityMatrix;
use qdesign_core::Result;

/// Figure identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig2a,
    Fig2b,
    Fig2c,
    Fig3a,
    Fig3b,
}

impl FigureId {
    pub const ALL: [FigureId; 5] = [
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig2c,
        FigureId::Fig3a,
        FigureId::Fig3b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig2c => "fig2c",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown figure id '{0}' (expected fig2a, fig2b, fig2c, fig3a or fig3b)")]
pub struct UnknownFigure(pub String);

impl FromStr for FigureId {
    type Err = UnknownFigure;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| UnknownFigure(s.to_string()))
    }
}

/// One CSV cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match *self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(x) => format_real(x),
            Cell::Empty => String::new(),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Int(v) => Some(v as f64),
            Cell::Real(x) => Some(x),
            Cell::Empty => None,
        }
    }
}

/// 12 significant digits, exponent form; `-0` prints as `0`.
pub fn format_real(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// A generated figure: header plus rows.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub id: FigureId,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl FigureTable {
    /// Column index by header name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("csv output is ASCII")
    }
}

/// Outcome counts of the fig2c grid.
pub const FIG2C_OUTCOMES: [usize; 21] = [
    2, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60, 65, 70, 75, 80, 85, 90, 95, 100,
];

/// Largest dimension on the fig2b and fig2c grids.
pub const MAX_FIG_DIM: usize = 50;

/// `α = 2, 2.05, …, alpha_max`; kept exact at multiples of 1/20.
fn alpha_grid(alpha_max: usize) -> impl Iterator<Item = f64> {
    (40..=20 * alpha_max).map(|k| k as f64 / 20.0)
}

pub fn generate(id: FigureId) -> Result<FigureTable> {
    match id {
        FigureId::Fig2a => fig2a(),
        FigureId::Fig2b => fig2b(),
        FigureId::Fig2c => fig2c(),
        FigureId::Fig3a => bound_curves(id, 2, 6, 5, 10),
        FigureId::Fig3b => bound_curves(id, 24, 1, 7, 16),
    }
}

fn fig2a() -> Result<FigureTable> {
    let mut header = vec!["p".to_string()];
    header.extend((1..=7).map(|t| format!("F_{t}")));
    let mut rows = Vec::with_capacity(101);
    for i in 0..=100 {
        let p = i as f64 / 100.0;
        let rho = DensityMatrix::qubit_mixture(p)?;
        let mut row = vec![Cell::Real(p)];
        for t in 1..=7 {
            row.push(Cell::Real(f_t_rho(&rho, t)?));
        }
        rows.push(row);
    }
    Ok(FigureTable {
        id: FigureId::Fig2a,
        header,
        rows,
    })
}

fn fig2b() -> Result<FigureTable> {
    let mut rows = Vec::new();
    for d in 2..=MAX_FIG_DIM {
        let tp = optimal_tprime(d, d, 1, f64::INFINITY, MAX_T)?;
        // per-measurement bound in the α → ∞ limit
        let bound = renyi_bound(d, d, 1, tp, f64::INFINITY, 1.0)?;
        rows.push(vec![Cell::Int(d as u64), Cell::Int(tp as u64), Cell::Real(bound)]);
    }
    Ok(FigureTable {
        id: FigureId::Fig2b,
        header: ["d", "t_prime", "bound"].map(String::from).to_vec(),
        rows,
    })
}

fn fig2c() -> Result<FigureTable> {
    let mut rows = Vec::new();
    for n in FIG2C_OUTCOMES {
        for d in 1..=MAX_FIG_DIM {
            let (excluded, tp) = if n < d {
                (1, Cell::Empty)
            } else {
                (0, Cell::Int(optimal_tprime(d, n, 1, f64::INFINITY, MAX_T)? as u64))
            };
            rows.push(vec![Cell::Int(n as u64), Cell::Int(d as u64), Cell::Int(excluded), tp]);
        }
    }
    Ok(FigureTable {
        id: FigureId::Fig2c,
        header: ["n", "d", "excluded", "t_prime"].map(String::from).to_vec(),
        rows,
    })
}

/// Qubit bound curves for `m` POVMs with `n` outcomes over `t' = 2..=t_max`.
fn bound_curves(id: FigureId, n: usize, m: usize, t_max: usize, alpha_max: usize) -> Result<FigureTable> {
    let mut header = vec!["alpha".to_string()];
    header.extend((2..=t_max).map(|tp| format!("bound_t{tp}")));
    header.push("best_t_prime".to_string());
    let mut rows = Vec::new();
    for alpha in alpha_grid(alpha_max) {
        let mut row = vec![Cell::Real(alpha)];
        for tp in 2..=t_max {
            row.push(if alpha >= tp as f64 {
                Cell::Real(renyi_bound(2, n, m, tp, alpha, 1.0)?)
            } else {
                Cell::Empty
            });
        }
        row.push(Cell::Int(optimal_tprime(2, n, m, alpha, t_max)? as u64));
        rows.push(row);
    }
    Ok(FigureTable { id, header, rows })
}
