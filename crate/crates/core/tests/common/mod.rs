#![allow(dead_code)]

use harmonic_core::{SquareGrid, Symbol};
use itertools::Itertools;

pub fn grid(rows: &[&[Symbol]]) -> SquareGrid {
    SquareGrid::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn a4() -> SquareGrid {
    grid(&[&[1, 2, 3, 4], &[2, 4, 1, 3], &[3, 1, 4, 2], &[4, 3, 2, 1]])
}

pub fn b4() -> SquareGrid {
    grid(&[&[1, 3, 4, 2], &[3, 2, 1, 4], &[4, 1, 2, 3], &[2, 4, 3, 1]])
}

pub fn a6() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6],
        &[2, 4, 1, 6, 3, 5],
        &[3, 1, 5, 2, 6, 4],
        &[4, 6, 2, 5, 1, 3],
        &[5, 3, 6, 1, 4, 2],
        &[6, 5, 4, 3, 2, 1],
    ])
}

/// First-order degenerate structure of order 6.
pub fn a6_prime() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6],
        &[2, 4, 6, 1, 3, 5],
        &[3, 6, 2, 5, 1, 4],
        &[4, 1, 5, 2, 6, 3],
        &[5, 3, 1, 6, 4, 2],
        &[6, 5, 4, 3, 2, 1],
    ])
}

pub fn a8() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[2, 4, 1, 6, 3, 8, 5, 7],
        &[3, 1, 5, 2, 7, 4, 8, 6],
        &[4, 6, 2, 8, 1, 7, 3, 5],
        &[5, 3, 7, 1, 8, 2, 6, 4],
        &[6, 8, 4, 7, 2, 5, 1, 3],
        &[7, 5, 8, 3, 6, 1, 4, 2],
        &[8, 7, 6, 5, 4, 3, 2, 1],
    ])
}

/// Second-order degenerate structure of order 8.
pub fn a8_second() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[2, 4, 8, 6, 3, 1, 5, 7],
        &[3, 8, 5, 2, 7, 4, 1, 6],
        &[4, 6, 2, 8, 1, 7, 3, 5],
        &[5, 3, 7, 1, 8, 2, 6, 4],
        &[6, 8, 4, 7, 2, 5, 1, 3],
        &[7, 5, 8, 3, 6, 1, 4, 2],
        &[8, 7, 6, 5, 4, 3, 2, 1],
    ])
}

/// Transpose of [`a8_second`] as printed, with its repeated symbols.
pub fn a8_second_transposed() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[2, 4, 8, 6, 3, 8, 5, 7],
        &[3, 8, 5, 2, 7, 4, 8, 6],
        &[4, 6, 2, 8, 1, 7, 3, 5],
        &[5, 3, 7, 1, 8, 2, 6, 4],
        &[6, 1, 4, 7, 2, 5, 1, 3],
        &[7, 5, 1, 3, 6, 1, 4, 2],
        &[8, 7, 6, 5, 4, 3, 2, 1],
    ])
}

/// Successive powers of the reduced order-9 generator, before interleaving.
pub fn power_matrix9() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        &[3, 1, 5, 2, 7, 4, 9, 6, 8],
        &[5, 3, 7, 1, 9, 2, 8, 4, 6],
        &[7, 5, 9, 3, 8, 1, 6, 2, 4],
        &[9, 7, 8, 5, 6, 3, 4, 1, 2],
        &[8, 9, 6, 7, 4, 5, 2, 3, 1],
        &[6, 8, 4, 9, 2, 7, 1, 5, 3],
        &[4, 6, 2, 8, 1, 9, 3, 7, 5],
        &[2, 4, 1, 6, 3, 8, 5, 9, 7],
    ])
}

pub fn sudoku9() -> SquareGrid {
    grid(&[
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        &[7, 5, 9, 3, 8, 1, 6, 2, 4],
        &[6, 8, 4, 9, 2, 7, 1, 5, 3],
        &[3, 1, 5, 2, 7, 4, 9, 6, 8],
        &[9, 7, 8, 5, 6, 3, 4, 1, 2],
        &[4, 6, 2, 8, 1, 9, 3, 7, 5],
        &[5, 3, 7, 1, 9, 2, 8, 4, 6],
        &[8, 9, 6, 7, 4, 5, 2, 3, 1],
        &[2, 4, 1, 6, 3, 8, 5, 9, 7],
    ])
}

/// Cycle-following oracle: the length of the orbit of each point under a
/// 1-based one-line map, combined by lcm.
pub fn order_by_orbits(images: &[usize]) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut order = 1u64;
    for start in 1..=images.len() {
        let mut len = 1u64;
        let mut cur = images[start - 1];
        while cur != start {
            cur = images[cur - 1];
            len += 1;
        }
        order = order / gcd(order, len) * len;
    }
    order
}

/// Definition check written out directly, without the library.
pub fn satisfies_definition(rows: &[&Vec<u32>], n: usize) -> bool {
    let mut seen = vec![vec![false; n + 1]; n + 1];
    for row in rows {
        for w in row.windows(2) {
            let (a, b) = (w[0] as usize, w[1] as usize);
            if a == b || seen[a][b] {
                return false;
            }
            seen[a][b] = true;
        }
    }
    true
}

/// Every ordered tuple of `n` permutations, filtered by the definition.
pub fn generate_and_filter(n: usize, normalize: bool) -> Vec<Vec<Vec<u32>>> {
    let perms: Vec<Vec<u32>> = (1..=n as u32).permutations(n).collect();
    let identity: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    for tuple in std::iter::repeat_n(perms.iter(), n).multi_cartesian_product() {
        if normalize && *tuple[0] != identity {
            continue;
        }
        if satisfies_definition(&tuple, n) {
            out.push(tuple.into_iter().cloned().collect());
        }
    }
    out
}
