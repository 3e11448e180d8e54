//! JSON wire formats and validation with field-path diagnostics.
//!
//! Matrix schema (states and Hamiltonians):
//! `{"dim": d, "matrix": [[[re, im], ...], ...], "kBT": number}` — row-major,
//! complex entries as two-element arrays, `kBT` only meaningful for
//! Hamiltonians. Free sets: `{"label": str, "states": [matrix, ...]}`.
//! Sweep specs: `{"state": file, "family": name, "grid": [numbers], "out": file}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use quench_core::hermitian::{matrix_to_rows, HermitianMatrix};
use quench_core::states::{DensityMatrix, Hamiltonian, PureBipartiteState};
use quench_core::tol::Tolerances;
use quench_core::witness::FreeSet;

#[derive(Debug, Deserialize, Serialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "kBT", skip_serializing_if = "Option::is_none")]
    pub kbt: Option<f64>,
}

#[derive(Debug, Deserialize)]
pub struct FreeSetFile {
    #[serde(default)]
    pub label: Option<String>,
    pub states: Vec<MatrixFile>,
}

#[derive(Debug, Deserialize)]
pub struct SweepSpec {
    pub state: String,
    pub family: String,
    pub grid: Vec<f64>,
    #[serde(default)]
    pub out: Option<String>,
}

/// Input-validation failure with the offending field path in the message.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

pub fn load_matrix_file(path: &str) -> Result<MatrixFile, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{path}: cannot read file: {e}")))?;
    let parsed: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{path}: malformed JSON: {e}")))?;
    validate_matrix_file(path, &parsed)?;
    Ok(parsed)
}

fn validate_matrix_file(path: &str, file: &MatrixFile) -> Result<(), InputError> {
    if file.dim == 0 {
        return Err(InputError(format!("{path}: dim: must be at least 1")));
    }
    if file.matrix.len() != file.dim {
        return Err(InputError(format!(
            "{path}: matrix: expected {} rows, found {}",
            file.dim,
            file.matrix.len()
        )));
    }
    for (i, row) in file.matrix.iter().enumerate() {
        if row.len() != file.dim {
            return Err(InputError(format!(
                "{path}: matrix[{i}]: expected {} columns, found {}",
                file.dim,
                row.len()
            )));
        }
        for (j, entry) in row.iter().enumerate() {
            if !entry[0].is_finite() || !entry[1].is_finite() {
                return Err(InputError(format!(
                    "{path}: matrix[{i}][{j}]: entry is not finite"
                )));
            }
        }
    }
    if let Some(kbt) = file.kbt {
        if !(kbt > 0.0 && kbt.is_finite()) {
            return Err(InputError(format!(
                "{path}: kBT: must be positive and finite, got {kbt}"
            )));
        }
    }
    Ok(())
}

fn to_cmatrix(file: &MatrixFile) -> nalgebra::DMatrix<Complex64> {
    nalgebra::DMatrix::from_fn(file.dim, file.dim, |i, j| {
        Complex64::new(file.matrix[i][j][0], file.matrix[i][j][1])
    })
}

pub fn load_density_matrix(path: &str, tols: &Tolerances) -> Result<DensityMatrix, InputError> {
    let file = load_matrix_file(path)?;
    let m = HermitianMatrix::with_tolerances(to_cmatrix(&file), tols)
        .map_err(|e| InputError(format!("{path}: matrix: {e}")))?;
    DensityMatrix::new(m).map_err(|e| InputError(format!("{path}: matrix: {e}")))
}

/// Loads a Hamiltonian; `kbt_flag` overrides the file's `kBT` when given on
/// the command line, and 1 is the default when neither is present.
pub fn load_hamiltonian(
    path: &str,
    tols: &Tolerances,
    kbt_flag: Option<f64>,
) -> Result<Hamiltonian, InputError> {
    let file = load_matrix_file(path)?;
    let kbt = kbt_flag.or(file.kbt).unwrap_or(1.0);
    let m = HermitianMatrix::with_tolerances(to_cmatrix(&file), tols)
        .map_err(|e| InputError(format!("{path}: matrix: {e}")))?;
    Hamiltonian::new(m, kbt).map_err(|e| InputError(format!("{path}: {e}")))
}

pub fn load_pure_bipartite(path: &str) -> Result<PureBipartiteState, InputError> {
    let file = load_matrix_file(path)?;
    let d = file.dim;
    let m = nalgebra::DMatrix::from_fn(d, d, |i, j| {
        Complex64::new(file.matrix[i][j][0], file.matrix[i][j][1])
    });
    PureBipartiteState::new(m).map_err(|e| InputError(format!("{path}: matrix: {e}")))
}

pub fn load_free_set(path: &str, tols: &Tolerances) -> Result<FreeSet, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{path}: cannot read file: {e}")))?;
    let parsed: FreeSetFile = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{path}: malformed JSON: {e}")))?;
    if parsed.states.is_empty() {
        return Err(InputError(format!("{path}: states: must not be empty")));
    }
    let mut points = Vec::with_capacity(parsed.states.len());
    for (idx, state) in parsed.states.iter().enumerate() {
        validate_matrix_file(&format!("{path}: states[{idx}]"), state)?;
        let m = HermitianMatrix::with_tolerances(to_cmatrix(state), tols)
            .map_err(|e| InputError(format!("{path}: states[{idx}]: {e}")))?;
        let dm = DensityMatrix::new(m)
            .map_err(|e| InputError(format!("{path}: states[{idx}]: {e}")))?;
        points.push(dm);
    }
    FreeSet::new(
        parsed.label.unwrap_or_else(|| "custom".into()),
        points,
    )
    .map_err(|e| InputError(format!("{path}: {e}")))
}

pub fn load_sweep_spec(path: &str) -> Result<SweepSpec, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{path}: cannot read file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{path}: malformed JSON: {e}")))
}

/// Standard matrix JSON for an operator, optionally with its kBT.
pub fn matrix_file_for(h: &HermitianMatrix, kbt: Option<f64>) -> MatrixFile {
    MatrixFile {
        dim: h.dim(),
        matrix: matrix_to_rows(h.data()),
        kbt,
    }
}
