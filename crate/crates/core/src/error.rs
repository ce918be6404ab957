use thiserror::Error;

use crate::harmonic::HarmonicReport;
use crate::sudoku::SudokuReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid order {0}: must be at least 1")]
    InvalidOrder(usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a permutation of 1..={n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("odd-order reduction failed: {0}")]
    Reduction(String),

    #[error("band reduction failed at order {order}: {detail}")]
    BandReduction { order: usize, detail: String },

    #[error("standardization failed: {0}")]
    Standardization(String),

    #[error("input is not harmonic: {0}")]
    NotHarmonic(Box<HarmonicReport>),

    #[error("enumeration refused: {0}")]
    Refused(String),

    #[error("sudoku construction produced an invalid board: {0}")]
    InvalidSudoku(Box<SudokuReport>),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
