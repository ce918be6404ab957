//! Permutations of `1..=n` and their permutation-matrix view.
//!
//! Every public interface speaks 1-based positions. A permutation `p` with
//! `p.image(i) = j` corresponds to the 0/1 matrix with a single `1` at
//! `(i, j)` in row `i`.
//!
//! Vectors are treated as row vectors multiplied on the right by the
//! matrix, so [`act_on_vector`] moves the entry at position `i` to position
//! `p.image(i)`. Composition follows the same convention: `compose(p, q)`
//! is the matrix product `p · q`, which applies `p` first and then `q`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{1, .., n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-based one-line form.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for (pos, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("position {} maps to {img}, out of range", pos + 1),
                });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("image {img} appears more than once"),
                });
            }
            map.push(img - 1);
        }
        Ok(Self { map })
    }

    pub(crate) fn from_zero_based_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&map));
        Self { map }
    }

    pub fn order(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based position `i`.
    ///
    /// # Panics
    /// Panics if `i` is not in `1..=n`.
    pub fn image(&self, i: usize) -> usize {
        assert!(
            (1..=self.order()).contains(&i),
            "position {i} out of range 1..={}",
            self.order()
        );
        self.map[i - 1] + 1
    }

    /// One-line form, 1-based.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&j| j + 1).collect()
    }

    pub(crate) fn as_zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle decomposition as 1-based cycles, each starting at its smallest
    /// element. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cycle.push(cur + 1);
                cur = self.map[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// True when the permutation is a single cycle through all `n` points.
    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Dense 0/1 matrix view, row-major.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.map.len();
        self.map
            .iter()
            .map(|&j| {
                let mut row = vec![0u8; n];
                row[j] = 1;
                row
            })
            .collect()
    }

    /// Reads a 0/1 matrix with exactly one `1` per row and column.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut images = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    actual: row.len(),
                });
            }
            let ones: Vec<usize> = row
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, _)| j + 1)
                .collect();
            match ones.as_slice() {
                [j] => images.push(*j),
                _ => {
                    return Err(Error::NotAPermutation {
                        n,
                        detail: format!("row {} has {} nonzero entries", i + 1, ones.len()),
                    })
                }
            }
        }
        Self::from_one_based(&images)
    }

    /// Matrix view as `n` lines of space-separated 0/1 entries.
    pub fn matrix_string(&self) -> String {
        let mut out = String::new();
        for row in self.to_matrix() {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn is_bijection(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&j| j < map.len() && !std::mem::replace(&mut seen[j], true))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &j) in self.map.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", j + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    line: 1,
                    message: format!("bad integer {tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_based(&images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::from_one_based(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.to_one_based()
    }
}

pub fn identity(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(Permutation {
        map: (0..n).collect(),
    })
}

/// The secondary identity: `i -> n + 1 - i`.
pub fn anti_identity(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(Permutation {
        map: (0..n).rev().collect(),
    })
}

/// Matrix product `p · q`: apply `p`, then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.order() != q.order() {
        return Err(Error::Dimension {
            expected: p.order(),
            actual: q.order(),
        });
    }
    Ok(Permutation {
        map: p.map.iter().map(|&j| q.map[j]).collect(),
    })
}

/// `p` composed with itself `k` times, by repeated squaring.
pub fn power(p: &Permutation, k: u64) -> Permutation {
    let mut result = Permutation {
        map: (0..p.order()).collect(),
    };
    let mut base = p.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = compose(&result, &base).expect("same order");
        }
        base = compose(&base, &base).expect("same order");
        k >>= 1;
    }
    result
}

/// Group-theoretic order: lcm of the cycle lengths.
pub fn order_of(p: &Permutation) -> u64 {
    p.cycles()
        .iter()
        .map(|c| c.len() as u64)
        .fold(1, |acc, len| acc / gcd(acc, len) * len)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Row vector times permutation matrix: `out[p(i)] = v[i]`.
pub fn act_on_vector<T: Clone>(v: &[T], p: &Permutation) -> Result<Vec<T>> {
    if v.len() != p.order() {
        return Err(Error::Dimension {
            expected: p.order(),
            actual: v.len(),
        });
    }
    let mut out: Vec<Option<T>> = vec![None; v.len()];
    for (i, x) in v.iter().enumerate() {
        out[p.map[i]] = Some(x.clone());
    }
    Ok(out.into_iter().map(|x| x.expect("bijection")).collect())
}
