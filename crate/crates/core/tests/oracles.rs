//! Independent brute-force oracles for the enumeration and canonical form.

mod common;

use std::collections::BTreeSet;

use common::generate_and_filter;
use harmonic_core::enumeration::{
    classify_all, enumerate_harmonic, for_each_row_set, EnumerationOptions,
};
use harmonic_core::isomorphism::canonical_form;
use harmonic_core::{HarmonicMatrix, Permutation, SquareGrid};
use itertools::Itertools;

fn options(normalize: bool) -> EnumerationOptions {
    EnumerationOptions {
        normalize_first_row: normalize,
        allow_large: false,
        parallel: false,
    }
}

fn as_sorted_rows(grids: &[SquareGrid]) -> BTreeSet<Vec<Vec<u32>>> {
    grids.iter().map(SquareGrid::to_rows).collect()
}

#[test]
fn order_four_matches_generate_and_filter() {
    let oracle_norm: BTreeSet<_> = generate_and_filter(4, true).into_iter().collect();
    let oracle_raw: BTreeSet<_> = generate_and_filter(4, false).into_iter().collect();
    // Frozen from the oracle.
    assert_eq!(oracle_norm.len(), 6);
    assert_eq!(oracle_raw.len(), 144);

    let norm = enumerate_harmonic(4, options(true)).unwrap();
    let raw = enumerate_harmonic(4, options(false)).unwrap();
    assert_eq!(norm.len(), oracle_norm.len());
    assert_eq!(raw.len(), oracle_raw.len());
    assert_eq!(as_sorted_rows(&norm), oracle_norm);
    assert_eq!(as_sorted_rows(&raw), oracle_raw);
}

#[test]
fn order_two_matches_generate_and_filter() {
    let oracle: BTreeSet<_> = generate_and_filter(2, false).into_iter().collect();
    let raw = enumerate_harmonic(2, options(false)).unwrap();
    assert_eq!(as_sorted_rows(&raw), oracle);
    assert_eq!(oracle.len(), 2);
}

#[test]
fn normalized_expanded_by_relabelings_equals_raw() {
    let norm = enumerate_harmonic(4, options(true)).unwrap();
    let mut expanded = BTreeSet::new();
    for g in &norm {
        for images in (1..=4usize).permutations(4) {
            let sigma = Permutation::from_one_based(&images).unwrap();
            expanded.insert(g.relabel(&sigma).unwrap().to_rows());
        }
    }
    let raw = as_sorted_rows(&enumerate_harmonic(4, options(false)).unwrap());
    assert_eq!(expanded, raw);
}

/// Minimum over all `n!` relabelings of the row-sorted relabeled grid.
fn exhaustive_canonical(g: &SquareGrid) -> Vec<Vec<u32>> {
    let n = g.n();
    (1..=n)
        .permutations(n)
        .map(|images| {
            let mut rows: Vec<Vec<u32>> = g
                .rows()
                .map(|r| r.iter().map(|&s| images[s as usize - 1] as u32).collect())
                .collect();
            rows.sort();
            rows
        })
        .min()
        .unwrap()
}

#[test]
fn restricted_canonical_form_matches_exhaustive_at_order_four() {
    let raw = enumerate_harmonic(4, options(false)).unwrap();
    assert!(!raw.is_empty());
    for g in raw {
        let fast = canonical_form(&HarmonicMatrix::new(g.clone()).unwrap());
        assert_eq!(fast.grid().to_rows(), exhaustive_canonical(&g));
    }
}

#[test]
fn restricted_canonical_form_matches_exhaustive_on_order_six_sample() {
    let mut sets = Vec::new();
    for_each_row_set(6, options(true), |g| sets.push(g.clone())).unwrap();
    for g in sets.iter().step_by(23) {
        let fast = canonical_form(&HarmonicMatrix::new(g.clone()).unwrap());
        assert_eq!(fast.grid().to_rows(), exhaustive_canonical(g));
    }
}

#[test]
fn raw_and_normalized_catalogs_agree_on_classes() {
    let norm = classify_all(4, options(true)).unwrap();
    let raw = classify_all(4, options(false)).unwrap();
    let classes = |c: &harmonic_core::enumeration::ClassCatalog| {
        c.classes
            .iter()
            .map(|e| e.canonical.clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(classes(&norm), classes(&raw));
    assert_eq!(raw.total_matrices, 144);
    assert_eq!(norm.total_matrices, 6);
}
