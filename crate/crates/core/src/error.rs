use std::fmt;

use thiserror::Error;

/// Which coefficient matrix a validation problem refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Matrix {
    C,
    D,
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Matrix::C => f.write_str("C"),
            Matrix::D => f.write_str("D"),
        }
    }
}

/// One violated hypothesis on a raw `(C, D)` pair. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    EmptySystem,
    ShapeMismatch { matrix: Matrix, row: usize, expected: usize, found: usize },
    NegativeEntry { matrix: Matrix, row: usize, column: usize, value: i64 },
    ZeroForm { matrix: Matrix, row: usize },
    DuplicateForm { c_row: usize, d_row: usize },
    UnusedVariable { column: usize },
    Unbalanced { column: usize, c_sum: i64, d_sum: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySystem => f.write_str("EmptySystem: no variables or no forms"),
            Violation::ShapeMismatch { matrix, row, expected, found } => write!(
                f,
                "ShapeMismatch: {matrix} row {row} has {found} columns, expected {expected}"
            ),
            Violation::NegativeEntry { matrix, row, column, value } => write!(
                f,
                "NegativeEntry: {matrix}[{row}][{column}] = {value}"
            ),
            Violation::ZeroForm { matrix, row } => {
                write!(f, "ZeroForm: {matrix} row {row} is identically zero")
            }
            Violation::DuplicateForm { c_row, d_row } => {
                write!(f, "DuplicateForm: C row {c_row} equals D row {d_row}")
            }
            Violation::UnusedVariable { column } => {
                write!(f, "UnusedVariable: x_{column} appears in no form")
            }
            Violation::Unbalanced { column, c_sum, d_sum } => write!(
                f,
                "Unbalanced: column {column} sums to {c_sum} in C but {d_sum} in D"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid linear-form system: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("harmonic number H_{0} is undefined (index must be positive)")]
    NonPositiveHarmonic(i64),
    #[error("point coordinate {index} = {value} is outside [0, 1)")]
    PointOutOfRange { index: usize, value: String },
    #[error("expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange { what: &'static str, index: usize, max: usize },
    #[error("index {index} outside {min}..={max}")]
    LogIndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("series has nonzero constant term; exp is only defined for zero constant term")]
    NonzeroConstantTerm,
    #[error("series shapes differ: {0}")]
    SeriesMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bracket [{z}]_{k} divides by zero")]
    DivisionByZero { z: i64, k: i64 },
    #[error("operation unsupported: {0}")]
    Unsupported(&'static str),
    #[error("configuration points {0} and {1} coincide")]
    DistinctnessViolation(usize, usize),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
