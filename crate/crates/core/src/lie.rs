//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Basis elements are `X_1, ..., X_n` with `[X_i, X_j] = sum_k C^k_ij X_k`. Storage is
//! 0-based; every index that reaches an error message or a report is 1-based.

use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{int, Matrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("constant array dimensions do not match n = {0}")]
    DimensionMismatch(usize),
    #[error("dimension must be positive")]
    EmptyAlgebra,
    #[error("antisymmetry violated: C^{k}_({i},{j}) != -C^{k}_({j},{i})")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },
    #[error("Jacobi identity violated at (i, j, k, l) = ({i}, {j}, {k}, {l})")]
    JacobiViolation { i: usize, j: usize, k: usize, l: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("unknown catalog algebra `{0}` (known: abelian2, solvable2, heisenberg3, sl2)")]
    UnknownAlgebra(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// A validated Lie algebra. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    n: usize,
    // brackets[i][j] = nonzero (k, C^k_ij)
    brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl LieAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `C^k_ij` (0-based).
    pub fn constant(&self, k: usize, i: usize, j: usize) -> Scalar {
        self.brackets[i][j].iter().find(|(kk, _)| *kk == k).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms of `[X_i, X_j]` (0-based).
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.brackets[i][j]
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().all(Vec::is_empty)
    }

    /// Matrix of `ad X_k` (0-based `k`): entry `(i, j)` is `C^i_kj`.
    pub fn adjoint_matrix(&self, k: usize) -> Result<Matrix, LieError> {
        if k >= self.n {
            return Err(LieError::IndexOutOfRange { index: k + 1, n: self.n });
        }
        let mut m = Matrix::zeros(self.n, self.n);
        for j in 0..self.n {
            for (i, c) in &self.brackets[k][j] {
                m[(*i, j)] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn adjoint_matrices(&self) -> Vec<Matrix> {
        (0..self.n).map(|k| self.adjoint_matrix(k).expect("in range")).collect()
    }

    /// `c_j = sum_i C^i_ij`, i.e. `-trace(ad X_j)`.
    pub fn modular_vector(&self) -> Vec<Scalar> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.constant(i, i, j)).sum()).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.modular_vector().iter().all(Zero::is_zero)
    }

    /// Dense `C[k][i][j]` copy.
    pub fn dense_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.n;
        let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, v) in &self.brackets[i][j] {
                    c[*k][i][j] = v.clone();
                }
            }
        }
        c
    }

    pub fn to_file(&self) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                for (k, v) in &self.brackets[i][j] {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        num: v.numer().try_into().expect("numerator fits i64"),
                        den: v.denom().try_into().expect("denominator fits i64"),
                    });
                }
            }
        }
        AlgebraFile { name: self.name.clone(), dim: self.n, labels: self.labels.clone(), brackets }
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

/// Validates a raw constant array `c[k][i][j] = C^k_ij` (0-based storage).
pub fn validate_structure(n: usize, c: &[Vec<Vec<Scalar>>]) -> Result<LieAlgebra, LieError> {
    validate_named("custom", default_labels(n), n, c)
}

fn validate_named(name: &str, labels: Vec<String>, n: usize, c: &[Vec<Vec<Scalar>>]) -> Result<LieAlgebra, LieError> {
    if n == 0 {
        return Err(LieError::EmptyAlgebra);
    }
    if c.len() != n || c.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n)) {
        return Err(LieError::DimensionMismatch(n));
    }
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if !(&c[k][i][j] + &c[k][j][i]).is_zero() {
                    return Err(LieError::AntisymmetryViolation { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (l, s) in jacobiator(c, i, j, k).into_iter().enumerate() {
                    if !s.is_zero() {
                        return Err(LieError::JacobiViolation { i: i + 1, j: j + 1, k: k + 1, l: l + 1 });
                    }
                }
            }
        }
    }
    let mut brackets = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !c[k][i][j].is_zero() {
                    brackets[i][j].push((k, c[k][i][j].clone()));
                }
            }
        }
    }
    let labels = if labels.len() == n { labels } else { default_labels(n) };
    Ok(LieAlgebra { name: name.to_string(), labels, n, brackets })
}

/// Builds an algebra from 1-based `(i, j, k, C^k_ij)` entries with `i < j`, completing antisymmetrically.
pub fn from_brackets(
    name: &str,
    labels: Vec<String>,
    n: usize,
    entries: &[(usize, usize, usize, Scalar)],
) -> Result<LieAlgebra, LieError> {
    validate_named(name, labels, n, &dense_from_brackets(n, entries)?)
}

/// Dense `c[k][i][j]` from 1-based entries, completed antisymmetrically but not validated.
pub fn dense_from_brackets(
    n: usize,
    entries: &[(usize, usize, usize, Scalar)],
) -> Result<Vec<Vec<Vec<Scalar>>>, LieError> {
    let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, j, k, v) in entries {
        for idx in [*i, *j, *k] {
            if idx == 0 || idx > n {
                return Err(LieError::IndexOutOfRange { index: idx, n });
            }
        }
        c[k - 1][i - 1][j - 1] += v;
        c[k - 1][j - 1][i - 1] -= v;
    }
    Ok(c)
}

/// Coefficients of `[[X_i, X_j], X_k] + [[X_j, X_k], X_i] + [[X_k, X_i], X_j]` (0-based).
pub fn jacobiator(c: &[Vec<Vec<Scalar>>], i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let n = c.len();
    (0..n)
        .map(|l| {
            let mut s = Scalar::zero();
            for m in 0..n {
                s += &c[m][i][j] * &c[l][m][k];
                s += &c[m][j][k] * &c[l][m][i];
                s += &c[m][k][i] * &c[l][m][j];
            }
            s
        })
        .collect()
}

/// Unvalidated structure constants, as read from a catalog name or file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub labels: Vec<String>,
    pub n: usize,
    pub constants: Vec<Vec<Vec<Scalar>>>,
}

impl RawAlgebra {
    pub fn validate(&self) -> Result<LieAlgebra, LieError> {
        validate_named(&self.name, self.labels.clone(), self.n, &self.constants)
    }
}

/// Like `load_algebra`, stopping before validation. Errors are input errors only.
pub fn load_raw(source: &str) -> Result<RawAlgebra, LieError> {
    if CATALOG.contains(&source) {
        let l = builtin(source)?;
        return Ok(RawAlgebra {
            name: l.name.clone(),
            labels: l.labels.clone(),
            n: l.n,
            constants: l.dense_constants(),
        });
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(LieError::UnknownAlgebra(source.to_string()));
    }
    let text =
        std::fs::read_to_string(path).map_err(|e| LieError::Io { path: source.to_string(), message: e.to_string() })?;
    let file = parse_file(&text)?;
    let entries = file_entries(&file)?;
    if file.dim == 0 {
        return Err(LieError::EmptyAlgebra);
    }
    Ok(RawAlgebra {
        name: file.name.clone(),
        labels: file.labels.clone(),
        n: file.dim,
        constants: dense_from_brackets(file.dim, &entries)?,
    })
}

pub const CATALOG: [&str; 4] = ["abelian2", "solvable2", "heisenberg3", "sl2"];

pub fn builtin(name: &str) -> Result<LieAlgebra, LieError> {
    let labels = |ls: &[&str]| ls.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match name {
        "abelian2" => from_brackets(name, labels(&["X1", "X2"]), 2, &[]),
        "solvable2" => from_brackets(name, labels(&["X1", "X2"]), 2, &[(1, 2, 2, int(1))]),
        "heisenberg3" => from_brackets(name, labels(&["X1", "X2", "X3"]), 3, &[(1, 2, 3, int(1))]),
        "sl2" => from_brackets(
            name,
            labels(&["H", "E", "F"]),
            3,
            &[(1, 2, 2, int(2)), (1, 3, 3, int(-2)), (2, 3, 1, int(1))],
        ),
        other => Err(LieError::UnknownAlgebra(other.to_string())),
    }
}

/// On-disk JSON form of a Lie algebra. Only `i < j` brackets are listed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub num: i64,
    #[serde(default = "one_i64")]
    pub den: i64,
}

fn one_i64() -> i64 {
    1
}

fn parse_file(text: &str) -> Result<AlgebraFile, LieError> {
    serde_json::from_str(text).map_err(|e| LieError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_algebra_json(text: &str) -> Result<LieAlgebra, LieError> {
    let file = parse_file(text)?;
    let entries = file_entries(&file)?;
    from_brackets(&file.name, file.labels, file.dim, &entries)
}

fn file_entries(file: &AlgebraFile) -> Result<Vec<(usize, usize, usize, Scalar)>, LieError> {
    let mut entries = Vec::with_capacity(file.brackets.len());
    for b in &file.brackets {
        if b.i >= b.j {
            return Err(LieError::Parse {
                line: 0,
                column: 0,
                message: format!("bracket entry ({}, {}) must have i < j", b.i, b.j),
            });
        }
        if b.den == 0 {
            return Err(LieError::Parse {
                line: 0,
                column: 0,
                message: format!("zero denominator in bracket ({}, {}, {})", b.i, b.j, b.k),
            });
        }
        entries.push((b.i, b.j, b.k, crate::scalar::ratio(b.num, b.den)));
    }
    Ok(entries)
}

/// Catalog name first, otherwise a JSON file path.
pub fn load_algebra(source: &str) -> Result<LieAlgebra, LieError> {
    load_raw(source)?.validate()
}
