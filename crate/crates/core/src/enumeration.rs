//! Exhaustive enumeration of harmonic matrices of small even order.
//!
//! Rows are drawn from all `n!` permutations in lexicographic order. Each
//! candidate row is precomputed as a bitmask over the `n²` ordered pairs it
//! realizes, so two rows are compatible exactly when their masks are
//! disjoint. Any `n` pairwise-compatible rows cover all `n(n-1)` pairs, so
//! the search only has to pick `n` mutually disjoint candidates.
//!
//! The core search visits unordered row sets (rows strictly increasing).
//! Since the rows of a harmonic matrix are distinct, every row set yields
//! one grid per ordering of its rows, and the grid stream is produced by
//! expanding each set.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{SquareGrid, Symbol};
use crate::harmonic::{standardize, symmetry_profile};
use crate::isomorphism::canonical_grid;

/// Largest order the exhaustive search accepts without an override.
pub const DEFAULT_MAX_ORDER: usize = 6;
/// Hard limit: pair masks are 64 bits wide.
pub const ABSOLUTE_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Fix the first row to `(1, .., n)`.
    pub normalize_first_row: bool,
    /// Permit orders above [`DEFAULT_MAX_ORDER`].
    pub allow_large: bool,
    /// Split the search by second row across threads.
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            normalize_first_row: true,
            allow_large: false,
            parallel: true,
        }
    }
}

fn check_order(n: usize, allow_large: bool) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "exhaustive enumeration needs an even order >= 2, got {n}"
        )));
    }
    if n > ABSOLUTE_MAX_ORDER {
        return Err(Error::Refused(format!(
            "order {n} exceeds the supported maximum of {ABSOLUTE_MAX_ORDER}"
        )));
    }
    if n > DEFAULT_MAX_ORDER && !allow_large {
        return Err(Error::Refused(format!(
            "order {n} is above {DEFAULT_MAX_ORDER}; the search space is enormous. \
             Pass the large-order override to run it anyway"
        )));
    }
    Ok(())
}

struct Candidates {
    n: usize,
    rows: Vec<Vec<u8>>,
    masks: Vec<u64>,
}

impl Candidates {
    fn new(n: usize) -> Self {
        let rows = lexicographic_permutations(n);
        let masks = rows
            .iter()
            .map(|row| {
                row.windows(2)
                    .fold(0u64, |m, w| m | 1u64 << (w[0] as usize * n + w[1] as usize))
            })
            .collect();
        Self { n, rows, masks }
    }

    fn grid(&self, set: &[usize]) -> SquareGrid {
        let cells = set
            .iter()
            .flat_map(|&i| self.rows[i].iter().map(|&s| s as Symbol + 1))
            .collect();
        SquareGrid::from_cells_unchecked(self.n, cells)
    }
}

/// All permutations of `0..n` in lexicographic order.
fn lexicographic_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Depth-first search over strictly increasing candidate indices.
///
/// `pool` holds the candidates still compatible with everything chosen so
/// far; it shrinks at every level.
fn extend(
    cands: &Candidates,
    chosen: &mut Vec<usize>,
    pool: &[usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == cands.n {
        visit(chosen);
        return;
    }
    let remaining = cands.n - chosen.len();
    for (k, &c) in pool.iter().enumerate() {
        if pool.len() - k < remaining {
            break;
        }
        let mask = cands.masks[c];
        let next: Vec<usize> = pool[k + 1..]
            .iter()
            .copied()
            .filter(|&d| cands.masks[d] & mask == 0)
            .collect();
        if next.len() + 1 < remaining {
            continue;
        }
        chosen.push(c);
        extend(cands, chosen, &next, visit);
        chosen.pop();
    }
}

fn compatible_with(cands: &Candidates, base: usize, from: usize) -> Vec<usize> {
    let mask = cands.masks[base];
    (from..cands.rows.len())
        .filter(|&d| cands.masks[d] & mask == 0)
        .collect()
}

/// Visits every set of `n` rows forming a harmonic matrix, as candidate
/// index lists in increasing order. Sets are visited in lexicographic
/// order of their rows. With `normalize_first_row`, only sets containing
/// the identity row (always the first row of its set) are visited.
fn search_row_sets(cands: &Candidates, normalize_first_row: bool, visit: &mut dyn FnMut(&[usize])) {
    let firsts: Vec<usize> = if normalize_first_row {
        vec![0]
    } else {
        (0..cands.rows.len()).collect()
    };
    for first in firsts {
        let pool = compatible_with(cands, first, first + 1);
        let mut chosen = vec![first];
        extend(cands, &mut chosen, &pool, visit);
    }
}

/// Visits every harmonic row set of order `n` as a grid whose rows are in
/// lexicographic order. With `normalize_first_row` the first row is the
/// identity.
pub fn for_each_row_set(
    n: usize,
    options: EnumerationOptions,
    mut visit: impl FnMut(&SquareGrid),
) -> Result<()> {
    check_order(n, options.allow_large)?;
    let cands = Candidates::new(n);
    search_row_sets(&cands, options.normalize_first_row, &mut |set| {
        visit(&cands.grid(set))
    });
    Ok(())
}

/// Streams every grid satisfying the harmonic definition.
///
/// With `normalize_first_row`, the first row is fixed to `(1, .., n)` and
/// the remaining rows appear in every order; otherwise all row orders of
/// all row sets are produced. The order of the stream is deterministic.
pub fn for_each_harmonic(
    n: usize,
    options: EnumerationOptions,
    mut visit: impl FnMut(&SquareGrid),
) -> Result<()> {
    let fixed = usize::from(options.normalize_first_row);
    for_each_row_set(n, options, |set| {
        let mut tail: Vec<usize> = (fixed..n).collect();
        let head: Vec<usize> = (0..fixed).collect();
        loop {
            let order: Vec<usize> = head.iter().chain(&tail).copied().collect();
            visit(&set.reorder_rows(&order));
            if !next_permutation(&mut tail) {
                break;
            }
        }
    })
}

/// Collects [`for_each_harmonic`] into a vector.
pub fn enumerate_harmonic(n: usize, options: EnumerationOptions) -> Result<Vec<SquareGrid>> {
    let mut out = Vec::new();
    for_each_harmonic(n, options, |g| out.push(g.clone()))?;
    Ok(out)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    let Some(i) = (1..n).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..n)
        .rev()
        .find(|&j| xs[j] > xs[i - 1])
        .expect("successor exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub canonical: SquareGrid,
    /// Grids of the enumeration in this class.
    pub members: u64,
    /// Members that are symmetric across both diagonals.
    pub doubly_symmetric_members: u64,
}

impl ClassEntry {
    pub fn is_doubly_symmetric(&self) -> bool {
        self.doubly_symmetric_members > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCatalog {
    pub n: usize,
    pub normalize_first_row: bool,
    pub classes: Vec<ClassEntry>,
    /// Grids enumerated, counting every row order.
    pub total_matrices: u64,
    /// Distinct row sets found.
    pub row_sets: u64,
}

/// Class counts from the literature for the normalized search at orders 4
/// and 6.
pub fn claimed_class_count(n: usize) -> Option<usize> {
    match n {
        4 => Some(1),
        6 => Some(2),
        _ => None,
    }
}

impl ClassCatalog {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn doubly_symmetric_class_count(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.is_doubly_symmetric())
            .count()
    }

    pub fn find(&self, canonical: &SquareGrid) -> Option<&ClassEntry> {
        self.classes.iter().find(|c| &c.canonical == canonical)
    }

    /// `Some((claimed, found))` when the class count disagrees with
    /// [`claimed_class_count`].
    pub fn discrepancy(&self) -> Option<(usize, usize)> {
        claimed_class_count(self.n)
            .filter(|&claimed| claimed != self.class_count())
            .map(|claimed| (claimed, self.class_count()))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                serde_json::json!({
                    "canonical": c.canonical.to_rows(),
                    "members": c.members,
                    "doubly_symmetric_members": c.doubly_symmetric_members,
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "class_count": self.class_count(),
            "classes": classes,
            "total": self.total_matrices,
            "row_sets": self.row_sets,
            "normalize_first_row": self.normalize_first_row,
            "doubly_symmetric_class_count": self.doubly_symmetric_class_count(),
            "claimed_class_count": claimed_class_count(self.n),
            "discrepancy": self.discrepancy().is_some(),
        })
    }
}

#[derive(Default)]
struct Tally {
    members: u64,
    symmetric: u64,
}

type PartialCatalog = BTreeMap<SquareGrid, Tally>;

fn tally_set(cat: &mut PartialCatalog, set: &SquareGrid, orderings: u64) {
    let canonical = canonical_grid(set).into_grid();
    // A grid symmetric about the main diagonal has column 1 equal to row 1,
    // so its row order is fixed by the row heads; check that one order.
    let symmetric = standardize(set)
        .map(|s| symmetry_profile(&s).doubly_diagonal())
        .unwrap_or(false);
    let entry = cat.entry(canonical).or_default();
    entry.members += orderings;
    entry.symmetric += u64::from(symmetric);
}

fn merge(into: &mut PartialCatalog, from: PartialCatalog) {
    for (k, v) in from {
        let e = into.entry(k).or_default();
        e.members += v.members;
        e.symmetric += v.symmetric;
    }
}

/// Enumerates and groups every harmonic matrix of order `n` into
/// isomorphism classes, sorted by canonical grid.
///
/// The doubly symmetric count of a class only counts members whose rows
/// are in standard (head-sorted) order, since a symmetric grid has exactly
/// one such arrangement.
pub fn classify_all(n: usize, options: EnumerationOptions) -> Result<ClassCatalog> {
    check_order(n, options.allow_large)?;
    let cands = Candidates::new(n);
    let fixed = usize::from(options.normalize_first_row);
    let orderings = factorial(n - fixed);

    let firsts: Vec<usize> = if options.normalize_first_row {
        vec![0]
    } else {
        (0..cands.rows.len()).collect()
    };
    // Work units: (first row, second row). Each unit is explored
    // independently and results are merged in unit order.
    let units: Vec<(usize, usize)> = firsts
        .iter()
        .flat_map(|&f| {
            compatible_with(&cands, f, f + 1)
                .into_iter()
                .map(move |s| (f, s))
        })
        .collect();

    let run_unit = |&(first, second): &(usize, usize)| -> (PartialCatalog, u64) {
        let mut cat = PartialCatalog::new();
        let mut sets = 0u64;
        let pool: Vec<usize> = compatible_with(&cands, first, second + 1)
            .into_iter()
            .filter(|&d| cands.masks[d] & cands.masks[second] == 0)
            .collect();
        let mut chosen = vec![first, second];
        extend(&cands, &mut chosen, &pool, &mut |set| {
            sets += 1;
            tally_set(&mut cat, &cands.grid(set), orderings);
        });
        (cat, sets)
    };

    let parts: Vec<(PartialCatalog, u64)> = if units.is_empty() {
        Vec::new()
    } else if options.parallel {
        units.par_iter().map(run_unit).collect()
    } else {
        units.iter().map(run_unit).collect()
    };

    let mut all = PartialCatalog::new();
    let mut row_sets = 0;
    for (cat, sets) in parts {
        merge(&mut all, cat);
        row_sets += sets;
    }
    let classes: Vec<ClassEntry> = all
        .into_iter()
        .map(|(canonical, t)| ClassEntry {
            canonical,
            members: t.members,
            doubly_symmetric_members: t.symmetric,
        })
        .collect();
    Ok(ClassCatalog {
        n,
        normalize_first_row: options.normalize_first_row,
        total_matrices: classes.iter().map(|c| c.members).sum(),
        classes,
        row_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::is_harmonic;

    fn opts(normalize: bool) -> EnumerationOptions {
        EnumerationOptions {
            normalize_first_row: normalize,
            allow_large: false,
            parallel: false,
        }
    }

    #[test]
    fn lexicographic_permutations_are_ordered() {
        let perms = lexicographic_permutations(4);
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(lexicographic_permutations(1), vec![vec![0]]);
    }

    #[test]
    fn order_two_has_one_grid() {
        let grids = enumerate_harmonic(2, opts(true)).unwrap();
        assert_eq!(grids.len(), 1);
        assert_eq!(grids[0].to_rows(), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(classify_all(2, opts(true)).unwrap().class_count(), 1);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(
            enumerate_harmonic(5, opts(true)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            enumerate_harmonic(0, opts(true)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            enumerate_harmonic(8, opts(true)),
            Err(Error::Refused(_))
        ));
        let big = EnumerationOptions {
            allow_large: true,
            ..opts(true)
        };
        assert!(matches!(
            enumerate_harmonic(10, big),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn stream_is_harmonic_and_deterministic() {
        let a = enumerate_harmonic(4, opts(true)).unwrap();
        let b = enumerate_harmonic(4, opts(true)).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
        for g in &a {
            assert!(is_harmonic(g).ok);
            assert_eq!(g.row(0), &[1, 2, 3, 4]);
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = classify_all(4, opts(false)).unwrap();
        let par = classify_all(
            4,
            EnumerationOptions {
                parallel: true,
                ..opts(false)
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn catalog_counts_are_consistent() {
        let cat = classify_all(4, opts(true)).unwrap();
        let streamed = enumerate_harmonic(4, opts(true)).unwrap().len() as u64;
        assert_eq!(cat.total_matrices, streamed);
        assert_eq!(cat.row_sets * factorial(3), streamed);
        let canon: Vec<_> = cat.classes.iter().map(|c| &c.canonical).collect();
        assert!(canon.windows(2).all(|w| w[0] < w[1]));
    }
}
