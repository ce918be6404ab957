//! Band reduction: removing the three central anti-diagonals of an order-`n`
//! harmonic matrix and fusing the two remaining triangles into a harmonic
//! matrix of order `n - 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{SquareGrid, Symbol};
use crate::harmonic::{is_harmonic, HarmonicMatrix};

/// Cells `(i, j)`, 1-based, with `|i + j - (n + 1)| <= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BandSpec {
    pub n: usize,
    pub cells: Vec<(usize, usize)>,
}

impl BandSpec {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        (self.n..=self.n + 2).contains(&(i + j))
    }
}

pub fn band_indices(n: usize) -> Result<BandSpec> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "band reduction needs an even order >= 4, got {n}"
        )));
    }
    let cells = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| (n..=n + 2).contains(&(i + j)))
        .collect();
    Ok(BandSpec { n, cells })
}

/// Fuses row `k` of the upper triangle with row `k + 2` of the lower
/// triangle (1-based), sharing one symbol on the secondary diagonal:
///
/// * upper segment: cells `(k, 1 ..= n-1-k)`
/// * lower segment: cells `(k+2, n+1-k ..= n)`
///
/// The last upper symbol must equal the first lower symbol.
pub fn reduce_mu(m: &HarmonicMatrix) -> Result<HarmonicMatrix> {
    let g = m.grid();
    let n = g.n();
    band_indices(n).map_err(|e| Error::BandReduction {
        order: n,
        detail: e.to_string(),
    })?;
    let small = n - 2;
    let mut cells: Vec<Symbol> = Vec::with_capacity(small * small);
    for k in 1..=small {
        let upper: Vec<Symbol> = (1..=n - 1 - k).map(|j| g.get(k - 1, j - 1)).collect();
        let lower: Vec<Symbol> = (n + 1 - k..=n).map(|j| g.get(k + 1, j - 1)).collect();
        let (&joint_up, &joint_down) = (upper.last().expect("k <= n-2"), &lower[0]);
        if joint_up != joint_down {
            return Err(Error::BandReduction {
                order: n,
                detail: format!(
                    "row {k}: upper segment ends with {joint_up} but row {} resumes with {joint_down}; \
                     the input is not symmetric enough to fuse",
                    k + 2
                ),
            });
        }
        let before = cells.len();
        cells.extend_from_slice(&upper);
        cells.extend_from_slice(&lower[1..]);
        debug_assert_eq!(cells.len() - before, small);
    }

    let out_of_range = cells.iter().find(|&&s| s as usize > small);
    if let Some(s) = out_of_range {
        return Err(Error::BandReduction {
            order: n,
            detail: format!("fused grid contains symbol {s} outside 1..={small}"),
        });
    }
    let grid = SquareGrid::from_cells_unchecked(small, cells);
    let report = is_harmonic(&grid);
    if !report.ok {
        return Err(Error::BandReduction {
            order: n,
            detail: format!("fused grid is not harmonic: {}", report.summary()),
        });
    }
    Ok(HarmonicMatrix::new_unchecked(grid, m.family()))
}

/// `m`, then repeated reductions down to order 2.
pub fn nesting_chain(m: &HarmonicMatrix) -> Result<Vec<HarmonicMatrix>> {
    let mut chain = vec![m.clone()];
    if m.n() < 2 || !m.n().is_multiple_of(2) {
        return Err(Error::BandReduction {
            order: m.n(),
            detail: "the chain is defined for even orders only".into(),
        });
    }
    while chain.last().expect("non-empty").n() > 2 {
        let next = reduce_mu(chain.last().expect("non-empty"))?;
        chain.push(next);
    }
    Ok(chain)
}
