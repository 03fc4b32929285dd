use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{contract, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Plain,
    Barred,
}

/// Skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(i, o)| i > o) {
            return contract(format!("{inner:?} is not contained in {outer:?}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn inner_len(&self, row: usize) -> u32 {
        self.inner.get(row).copied().unwrap_or(0)
    }

    pub fn outer_len(&self, row: usize) -> u32 {
        self.outer.get(row).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: u32) -> bool {
        col >= self.inner_len(row) && col < self.outer_len(row)
    }

    /// Rows (0-based) of the cells of column `col` (0-based), top to bottom.
    pub fn column_rows(&self, col: u32) -> Vec<usize> {
        (0..self.outer.len()).filter(|&r| self.contains(r, col)).collect()
    }

    pub fn width(&self) -> u32 {
        self.outer.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.outer.iter().sum::<u32>() - self.inner.iter().sum::<u32>()
    }
}

/// Filling of a skew shape; `rows[r]` lists the entries of row `r` from
/// column `inner[r]` to `outer[r] - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    pub shape: SkewShape,
    pub alphabet: Alphabet,
    pub rows: Vec<Vec<i32>>,
}

impl SkewTableau {
    pub fn get(&self, row: usize, col: u32) -> Option<i32> {
        if !self.shape.contains(row, col) {
            return None;
        }
        Some(self.rows[row][(col - self.shape.inner_len(row)) as usize])
    }

    /// Rows weakly increase, columns strictly increase, letters match the alphabet.
    pub fn is_valid(&self) -> bool {
        let s = &self.shape;
        if self.rows.len() != s.outer.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() as u32 != s.outer_len(r) - s.inner_len(r) {
                return false;
            }
            let sign_ok = match self.alphabet {
                Alphabet::Plain => row.iter().all(|&x| x > 0),
                Alphabet::Barred => row.iter().all(|&x| x < 0),
            };
            if !sign_ok || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                for (k, &x) in row.iter().enumerate() {
                    let c = s.inner_len(r) + k as u32;
                    if let Some(above) = self.get(r - 1, c) {
                        if above >= x {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Letters of column `col` (0-based), top to bottom.
    pub fn column(&self, col: u32) -> Vec<i32> {
        self.shape.column_rows(col).into_iter().filter_map(|r| self.get(r, col)).collect()
    }

    /// Reading word: rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<i32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = (0..self.shape.outer.len())
            .map(|r| {
                (0..self.shape.outer_len(r))
                    .map(|c| match self.get(r, c) {
                        None => ".".to_string(),
                        Some(x) if x < 0 => format!("~{}", -x),
                        Some(x) => x.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}
