//! Design and state files.
//!
//! A design file is JSON with the fields `name`, `dim`, `declared_t` and `vectors`, each
//! vector a list of `[re, im]` amplitude pairs. [`design_to_string`] writes the canonical
//! form: fixed field order, one vector per line and every float with 17 significant digits,
//! so loading and saving a canonical file reproduces it byte for byte. Loading re-verifies
//! the declared strength.
//!
//! A state file holds either a density matrix,
//! `{"dim": 2, "entries": [[[re, im], ...], ...]}`, or a pure state,
//! `{"dim": 2, "amplitudes": [[re, im], ...]}`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use qdesign_core::designs::{catalog, DesignSet};
use qdesign_core::linalg::{CMatrix, DensityMatrix, PureState, C64};
use serde::Deserialize;

/// Errors reading or writing design and state files.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}: {message}")]
    Shape { path: PathBuf, message: String },

    #[error("{path}: {source}")]
    Invalid {
        path: PathBuf,
        #[source]
        source: qdesign_core::Error,
    },
}

impl FileError {
    /// The numerical error behind an [`FileError::Invalid`], if any.
    pub fn core_error(&self) -> Option<&qdesign_core::Error> {
        match self {
            FileError::Invalid { source, .. } => Some(source),
            _ => None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DesignFile {
    name: String,
    dim: usize,
    declared_t: usize,
    vectors: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum StateFile {
    Mixed { dim: usize, entries: Vec<Vec<[f64; 2]>> },
    Pure { dim: usize, amplitudes: Vec<[f64; 2]> },
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn amplitude_list(amplitudes: &[C64]) -> String {
    let pairs: Vec<String> = amplitudes
        .iter()
        .map(|z| format!("[{}, {}]", float(z.re), float(z.im)))
        .collect();
    format!("[{}]", pairs.join(", "))
}

/// Canonical JSON text of a design.
pub fn design_to_string(design: &DesignSet) -> String {
    let name = serde_json::to_string(design.name()).expect("strings always serialize");
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {name},");
    let _ = writeln!(out, "  \"dim\": {},", design.dim());
    let _ = writeln!(out, "  \"declared_t\": {},", design.declared_t());
    out.push_str("  \"vectors\": [\n");
    let lines: Vec<String> = design
        .vectors()
        .iter()
        .map(|v| format!("    {}", amplitude_list(v.amplitudes())))
        .collect();
    out.push_str(&lines.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

/// Parses design JSON and verifies the declared strength. `origin` labels errors.
pub fn design_from_str(text: &str, origin: &Path) -> Result<DesignSet, FileError> {
    let file: DesignFile = serde_json::from_str(text).map_err(|source| FileError::Json {
        path: origin.to_path_buf(),
        source,
    })?;
    let invalid = |source| FileError::Invalid {
        path: origin.to_path_buf(),
        source,
    };
    let mut vectors = Vec::with_capacity(file.vectors.len());
    for (i, raw) in file.vectors.iter().enumerate() {
        if raw.len() != file.dim {
            return Err(FileError::Shape {
                path: origin.to_path_buf(),
                message: format!("vector {i} has {} amplitudes, expected dim = {}", raw.len(), file.dim),
            });
        }
        let amplitudes = raw.iter().map(|&[re, im]| C64::new(re, im)).collect();
        vectors.push(PureState::new(amplitudes).map_err(invalid)?);
    }
    DesignSet::new(file.name, vectors, file.declared_t).map_err(invalid)
}

/// Writes the canonical form of `design` to `path`.
pub fn save_design(design: &DesignSet, path: &Path) -> Result<(), FileError> {
    fs::write(path, design_to_string(design)).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads and verifies a design file.
pub fn load_design(path: &Path) -> Result<DesignSet, FileError> {
    design_from_str(&read(path)?, path)
}

/// A catalog name, or failing that a path to a design file.
pub fn resolve_design(spec: &str) -> Result<DesignSet, FileError> {
    let path = Path::new(spec);
    if path.is_file() {
        return load_design(path);
    }
    catalog(spec).map_err(|source| FileError::Invalid {
        path: PathBuf::from(spec),
        source,
    })
}

/// Reads a density matrix or pure state file.
pub fn load_state(path: &Path) -> Result<DensityMatrix, FileError> {
    let file: StateFile = serde_json::from_str(&read(path)?).map_err(|source| FileError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    let shape = |message: String| FileError::Shape {
        path: path.to_path_buf(),
        message,
    };
    let invalid = |source| FileError::Invalid {
        path: path.to_path_buf(),
        source,
    };
    match file {
        StateFile::Mixed { dim, entries } => {
            if entries.len() != dim || entries.iter().any(|row| row.len() != dim) {
                return Err(shape(format!("entries must be a {dim} x {dim} matrix")));
            }
            let m = CMatrix::from_fn(dim, dim, |i, j| C64::new(entries[i][j][0], entries[i][j][1]));
            DensityMatrix::new(m).map_err(invalid)
        }
        StateFile::Pure { dim, amplitudes } => {
            if amplitudes.len() != dim {
                return Err(shape(format!("expected {dim} amplitudes, found {}", amplitudes.len())));
            }
            let psi = PureState::new(amplitudes.iter().map(|&[re, im]| C64::new(re, im)).collect()).map_err(invalid)?;
            Ok(DensityMatrix::from_pure(&psi))
        }
    }
}

/// Writes a density matrix in the state-file format.
pub fn save_state(rho: &DensityMatrix, path: &Path) -> Result<(), FileError> {
    let m = rho.entries();
    let rows: Vec<String> = (0..rho.dim())
        .map(|i| {
            let row: Vec<C64> = (0..rho.dim()).map(|j| m[(i, j)]).collect();
            format!("    {}", amplitude_list(&row))
        })
        .collect();
    let text = format!(
        "{{\n  \"dim\": {},\n  \"entries\": [\n{}\n  ]\n}}\n",
        rho.dim(),
        rows.join(",\n")
    );
    fs::write(path, text).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}
