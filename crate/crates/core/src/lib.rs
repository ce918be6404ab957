//! Harmonic matrices: `n × n` arrays whose rows are permutations of
//! `1..=n` and whose horizontally adjacent cells realize every ordered pair
//! of distinct symbols exactly once (Tuscan squares).
//!
//! * [`perm`]: permutations and the row-vector action used by every builder
//! * [`generators`]: the specific generating permutations
//! * [`harmonic`]: constructions, verification, symmetry, classification
//! * [`isomorphism`]: canonical forms under relabeling and row reordering
//! * [`enumeration`]: exhaustive search and class catalogs for small orders
//! * [`reduction`]: band reduction from order `n` to `n - 2`
//! * [`sudoku`]: deterministic Sudoku boards

pub mod enumeration;
pub mod error;
pub mod generators;
pub mod grid;
pub mod harmonic;
pub mod isomorphism;
pub mod perm;
pub mod reduction;
pub mod sudoku;

pub use error::{Error, Result};
pub use grid::{GridDocument, SquareGrid, Symbol};
pub use harmonic::{Family, HarmonicMatrix};
pub use perm::Permutation;
