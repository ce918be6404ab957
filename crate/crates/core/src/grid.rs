//! Square arrays of symbols `1..=n` and their text / JSON encodings.
//!
//! Text form: a line holding `n`, then `n` lines of `n` space-separated
//! integers. Blank lines and lines starting with `#` are ignored.
//!
//! JSON form: `{"n": 4, "rows": [[1,2,3,4], ...], "family": null}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::Family;
use crate::perm::Permutation;

pub type Symbol = u32;

/// An `n × n` grid of symbols in `1..=n`, with no structural guarantee
/// beyond the range of its entries. Row and column indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareGrid {
    n: usize,
    cells: Vec<Symbol>,
}

impl SquareGrid {
    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    actual: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&s| s == 0 || s as usize > n) {
                return Err(Error::Domain(format!(
                    "symbol {bad} in row {} is outside 1..={n}",
                    i + 1
                )));
            }
            cells.extend(row);
        }
        Ok(Self { n, cells })
    }

    /// Row-major cells; caller guarantees the range invariant.
    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<Symbol>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert!(cells.iter().all(|&s| s >= 1 && s as usize <= n));
        Self { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Symbol {
        self.cells[row * self.n + col]
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Symbol]> + '_ {
        self.cells.chunks_exact(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Symbol> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Symbol>> {
        self.rows().map(<[Symbol]>::to_vec).collect()
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let cells = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(j, i))
            .collect();
        Self { n, cells }
    }

    /// Reflection across the secondary diagonal: `(i, j) -> (n-1-j, n-1-i)`.
    pub fn anti_transpose(&self) -> Self {
        let n = self.n;
        let cells = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(n - 1 - j, n - 1 - i))
            .collect();
        Self { n, cells }
    }

    /// New grid whose row `i` is row `order[i]` of `self`.
    pub fn reorder_rows(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.n);
        let cells = order
            .iter()
            .flat_map(|&r| self.row(r).iter().copied())
            .collect();
        Self { n: self.n, cells }
    }

    /// Applies the symbol relabeling `sigma` to every cell.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.order() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: sigma.order(),
            });
        }
        let map = sigma.as_zero_based();
        let cells = self
            .cells
            .iter()
            .map(|&s| map[s as usize - 1] as Symbol + 1)
            .collect();
        Ok(Self { n: self.n, cells })
    }

    /// Parses either encoding; JSON is detected by a leading `{`.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            Ok(GridDocument::parse(input)?.grid)
        } else {
            Self::parse_text(input)
        }
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: header_line,
            message: format!("expected the order on the first line, got {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: header_line,
                message: "order must be at least 1".into(),
            });
        }

        let mut cells = Vec::with_capacity(n * n);
        let mut rows_read = 0;
        for (line_no, line) in lines {
            if rows_read == n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("more than {n} rows"),
                });
            }
            let mut count = 0;
            for tok in line.split_whitespace() {
                let s: Symbol = tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad integer {tok:?}"),
                })?;
                if s == 0 || s as usize > n {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("symbol {s} outside 1..={n}"),
                    });
                }
                cells.push(s);
                count += 1;
            }
            if count != n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected {n} entries, found {count}"),
                });
            }
            rows_read += 1;
        }
        if rows_read != n {
            return Err(Error::Parse {
                line: input.lines().count().max(1),
                message: format!("expected {n} rows, found {rows_read}"),
            });
        }
        Ok(Self { n, cells })
    }

    /// Text encoding, including the order header line.
    pub fn to_text(&self) -> String {
        format!("{}\n{self}", self.n)
    }
}

/// Rows only, one per line.
impl fmt::Display for SquareGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquareGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareGrid(n = {})", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RawDocument {
    n: usize,
    rows: Vec<Vec<Symbol>>,
    #[serde(default)]
    family: Option<Family>,
}

/// The JSON wrapper around a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDocument {
    pub grid: SquareGrid,
    pub family: Option<Family>,
}

impl GridDocument {
    pub fn parse(input: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(input).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if raw.rows.len() != raw.n {
            return Err(Error::Parse {
                line: 1,
                message: format!("\"n\" is {} but {} rows given", raw.n, raw.rows.len()),
            });
        }
        let grid = SquareGrid::from_rows(raw.rows).map_err(|e| Error::Parse {
            line: 1,
            message: e.to_string(),
        })?;
        Ok(Self {
            grid,
            family: raw.family,
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.raw()).expect("plain data serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("plain data serializes")
    }

    fn raw(&self) -> RawDocument {
        RawDocument {
            n: self.grid.n,
            rows: self.grid.to_rows(),
            family: self.family,
        }
    }
}
