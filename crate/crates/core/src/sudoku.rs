//! Deterministic Sudoku boards from the odd-order power matrix.
//!
//! For box side `k` (odd), the even generator of order `k² + 1` is cut down
//! to order `k²`, its successive powers applied to `(1, .., k²)` give a
//! Latin square, and taking one row from each block of `k` rows in turn
//! produces a board whose boxes are complete as well. The result is always
//! validated before it is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{beta_pi, reduce_to_odd};
use crate::grid::{SquareGrid, Symbol};
use crate::harmonic::build_by_powers;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SudokuBoard {
    k: usize,
    grid: SquareGrid,
}

impl SudokuBoard {
    /// Validates `grid` as a board with box side `k`.
    pub fn new(grid: SquareGrid, k: usize) -> Result<Self> {
        let report = validate_sudoku(&grid, k)?;
        if !report.ok {
            return Err(Error::InvalidSudoku(Box::new(report)));
        }
        Ok(Self { k, grid })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn grid(&self) -> &SquareGrid {
        &self.grid
    }

    /// The board with every symbol renamed by `sigma`, re-validated.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        Self::new(self.grid.relabel(sigma)?, self.k)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "n": self.n(),
            "rows": self.grid.to_rows(),
            "valid": true,
        })
    }
}

/// Row `t` of the output (0-based) is input row `(t mod k)·k + t div k`.
pub fn interleave_blocks(g: &SquareGrid, k: usize) -> Result<SquareGrid> {
    check_box_side(g, k)?;
    let order: Vec<usize> = (0..g.n()).map(|t| (t % k) * k + t / k).collect();
    Ok(g.reorder_rows(&order))
}

fn check_box_side(g: &SquareGrid, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "box side must be at least 2, got {k}"
        )));
    }
    if g.n() != k * k {
        return Err(Error::Dimension {
            expected: k * k,
            actual: g.n(),
        });
    }
    Ok(())
}

/// The Latin square of successive powers, before interleaving.
pub fn power_square(k: usize) -> Result<SquareGrid> {
    if k < 2 || k.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "box side must be odd and at least 3 so that k² + 1 is even, got {k}"
        )));
    }
    let generator = reduce_to_odd(&beta_pi(k * k + 1)?)?;
    if !generator.is_full_cycle() {
        return Err(Error::Construction(format!(
            "reduced generator of order {} is not a single cycle",
            k * k
        )));
    }
    Ok(build_by_powers(&generator))
}

pub fn build_sudoku(k: usize) -> Result<SudokuBoard> {
    let board = interleave_blocks(&power_square(k)?, k)?;
    SudokuBoard::new(board, k)
}

/// Indices are 1-based. Boxes are numbered row-major by `(band, stack)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SudokuReport {
    pub ok: bool,
    pub row_violations: Vec<usize>,
    pub column_violations: Vec<usize>,
    pub box_violations: Vec<(usize, usize)>,
}

impl std::fmt::Display for SudokuReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok {
            return f.write_str("valid");
        }
        write!(
            f,
            "rows {:?}, columns {:?}, boxes {:?} incomplete",
            self.row_violations, self.column_violations, self.box_violations
        )
    }
}

fn is_complete(n: usize, symbols: impl Iterator<Item = Symbol>) -> bool {
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in symbols {
        let idx = s as usize - 1;
        if seen[idx] {
            return false;
        }
        seen[idx] = true;
        count += 1;
    }
    count == n
}

pub fn validate_sudoku(g: &SquareGrid, k: usize) -> Result<SudokuReport> {
    check_box_side(g, k)?;
    let n = g.n();
    let row_violations: Vec<usize> = (0..n)
        .filter(|&i| !is_complete(n, g.row(i).iter().copied()))
        .map(|i| i + 1)
        .collect();
    let column_violations: Vec<usize> = (0..n)
        .filter(|&j| !is_complete(n, (0..n).map(|i| g.get(i, j))))
        .map(|j| j + 1)
        .collect();
    let box_violations: Vec<(usize, usize)> = (0..k)
        .flat_map(|band| (0..k).map(move |stack| (band, stack)))
        .filter(|&(band, stack)| {
            let cells = (0..k).flat_map(|di| (0..k).map(move |dj| (band * k + di, stack * k + dj)));
            !is_complete(n, cells.map(|(i, j)| g.get(i, j)))
        })
        .map(|(b, s)| (b + 1, s + 1))
        .collect();
    Ok(SudokuReport {
        ok: row_violations.is_empty() && column_violations.is_empty() && box_violations.is_empty(),
        row_violations,
        column_violations,
        box_violations,
    })
}
