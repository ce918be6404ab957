//! Equivalence of harmonic matrices under a global symbol relabeling `σ`
//! combined with a reordering of rows `τ`.
//!
//! The canonical representative is found by trying, for each row `r`, the
//! relabeling that turns row `r` into `(1, .., n)`, sorting the relabeled
//! rows lexicographically, and keeping the smallest result. Only those `n`
//! relabelings need to be tried: after sorting, a lexicographically minimal
//! grid always begins with the identity row, so some original row was sent
//! to the identity.

use std::collections::HashMap;

use serde::Serialize;

use crate::grid::{SquareGrid, Symbol};
use crate::harmonic::HarmonicMatrix;
use crate::perm::{compose, identity, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    grid: SquareGrid,
}

impl CanonicalForm {
    pub fn grid(&self) -> &SquareGrid {
        &self.grid
    }

    pub fn into_grid(self) -> SquareGrid {
        self.grid
    }
}

/// `sigma` relabels symbols and `tau` sends row `i` of the source to row
/// `tau(i)` of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub sigma: Permutation,
    pub tau: Permutation,
}

impl IsoWitness {
    /// `N[τ(i)][j] = σ(M[i][j])`.
    pub fn apply(&self, m: &SquareGrid) -> crate::Result<SquareGrid> {
        let relabeled = m.relabel(&self.sigma)?;
        let inv = self.tau.inverse();
        let order: Vec<usize> = inv.as_zero_based().to_vec();
        Ok(relabeled.reorder_rows(&order))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub equal: bool,
    pub witness: Option<IsoWitness>,
}

/// Relabeling that sends `row` to `(1, .., n)`.
fn row_to_identity(row: &[Symbol]) -> Permutation {
    let mut map = vec![0usize; row.len()];
    for (j, &s) in row.iter().enumerate() {
        map[s as usize - 1] = j;
    }
    Permutation::from_zero_based_unchecked(map)
}

/// Relabels with the row-`r` candidate and sorts rows. Returns the sorted
/// cells and, for each sorted position, the originating row index.
fn candidate(g: &SquareGrid, r: usize) -> (Vec<Symbol>, Vec<usize>) {
    let n = g.n();
    let sigma = row_to_identity(g.row(r));
    let map = sigma.as_zero_based();
    let relabeled: Vec<Vec<Symbol>> = g
        .rows()
        .map(|row| {
            row.iter()
                .map(|&s| map[s as usize - 1] as Symbol + 1)
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| relabeled[a].cmp(&relabeled[b]).then(a.cmp(&b)));
    let cells = order
        .iter()
        .flat_map(|&i| relabeled[i].iter().copied())
        .collect();
    (cells, order)
}

/// Canonical cells and the lowest row index achieving them.
fn minimal_candidate(g: &SquareGrid) -> (Vec<Symbol>, usize) {
    let mut best: Option<(Vec<Symbol>, usize)> = None;
    for r in 0..g.n() {
        let (cells, _) = candidate(g, r);
        if best.as_ref().is_none_or(|(b, _)| cells < *b) {
            best = Some((cells, r));
        }
    }
    best.expect("grid has at least one row")
}

pub fn canonical_form(m: &HarmonicMatrix) -> CanonicalForm {
    canonical_grid(m.grid())
}

/// Canonical form of any grid whose rows are permutations. Harmonicity is
/// not checked here.
pub(crate) fn canonical_grid(g: &SquareGrid) -> CanonicalForm {
    let (cells, _) = minimal_candidate(g);
    CanonicalForm {
        grid: SquareGrid::from_cells_unchecked(g.n(), cells),
    }
}

pub fn are_isomorphic(m: &HarmonicMatrix, k: &HarmonicMatrix) -> IsoResult {
    let not_equal = IsoResult {
        equal: false,
        witness: None,
    };
    let (mg, kg) = (m.grid(), k.grid());
    if mg.n() != kg.n() {
        return not_equal;
    }
    let (k_cells, k_row) = minimal_candidate(kg);
    let Some(m_row) = (0..mg.n()).find(|&r| candidate(mg, r).0 == k_cells) else {
        return not_equal;
    };

    // M --σ_m--> canonical <--σ_k-- K, so σ = σ_m then σ_k⁻¹.
    let sigma_m = row_to_identity(mg.row(m_row));
    let sigma_k = row_to_identity(kg.row(k_row));
    let sigma = compose(&sigma_m, &sigma_k.inverse()).expect("same order");

    let relabeled = mg.relabel(&sigma).expect("same order");
    let target_rows: HashMap<&[Symbol], usize> =
        kg.rows().enumerate().map(|(i, row)| (row, i)).collect();
    let tau_map: Option<Vec<usize>> = relabeled
        .rows()
        .map(|row| target_rows.get(row).copied())
        .collect();
    let tau = tau_map.map(|map| {
        let images: Vec<usize> = map.iter().map(|i| i + 1).collect();
        Permutation::from_one_based(&images)
    });
    let Some(Ok(tau)) = tau else {
        return not_equal;
    };

    let witness = IsoWitness { sigma, tau };
    match witness.apply(mg) {
        Ok(ref applied) if applied == kg => IsoResult {
            equal: true,
            witness: Some(witness),
        },
        _ => not_equal,
    }
}

/// Identity witness for a matrix compared with itself.
pub fn trivial_witness(n: usize) -> IsoWitness {
    let id = identity(n).expect("n >= 1");
    IsoWitness {
        sigma: id.clone(),
        tau: id,
    }
}
