//! Matrices over the Gaussian rationals and exact rank computation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gaussian::{GaussInt, GaussianRational};
use crate::subset::{SubsetMask, MAX_GROUND};

/// A `d x n` matrix over `Q(i)` whose row space presents a subspace of `C^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GRMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl GRMatrix {
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if d == 0 || n == 0 {
            return Err(Error::InvalidParams("matrix must be non-empty".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParams("rows have different lengths".into()));
        }
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: n,
                limit: MAX_GROUND,
            });
        }
        Ok(GRMatrix {
            rows: d,
            cols: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from real integer entries.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&x| GaussianRational::from_ints(x, 0))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self::from_integers(&rows)
    }

    /// The `1 x n` all-ones matrix.
    pub fn ones(n: usize) -> Result<Self> {
        Self::from_integers(&[vec![1; n]])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// First zero column, if any.
    pub fn zero_column(&self) -> Option<usize> {
        (0..self.cols).find(|&j| (0..self.rows).all(|i| self.get(i, j).is_zero()))
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        linear_rank(self, SubsetMask::full(self.cols))
    }

    /// Rows scaled to clear denominators, as Gaussian integers.
    fn integer_rows(&self) -> Vec<Vec<GaussInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let scale = row
                    .iter()
                    .fold(BigInt::one(), |acc, z| acc.lcm(&z.denom_lcm()));
                row.iter().map(|z| z.scaled_to_integer(&scale)).collect()
            })
            .collect()
    }

    /// Parses the whitespace text format: one row per line, `#` comments.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(GaussianRational::from_str)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            rows.push(row);
        }
        Self::from_rows(rows).map_err(|e| match e {
            Error::InvalidParams(m) => Error::Parse(m),
            other => other,
        })
    }

    /// Parses `{"rows": [["3/2+1/3i", 0, ...], ...]}`; entries may be strings or integers.
    pub fn parse_json(input: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Int(i64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Doc {
            rows: Vec<Vec<Entry>>,
        }
        let doc: Doc = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = doc
            .rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|e| match e {
                        Entry::Int(x) => Ok(GaussianRational::from_ints(x, 0)),
                        Entry::Text(s) => s.parse(),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows).map_err(|e| match e {
            Error::InvalidParams(m) => Error::Parse(m),
            other => other,
        })
    }
}

impl fmt::Display for GRMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|z| z.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact rank of the column submatrix `A[S]`.
///
/// Rows are scaled into `Z[i]` and reduced with Bareiss fraction-free
/// elimination, so every intermediate entry is a minor of the input and all
/// divisions are exact.
pub fn linear_rank(a: &GRMatrix, s: SubsetMask) -> usize {
    let cols: Vec<usize> = s.iter().filter(|&j| j < a.cols).collect();
    if cols.is_empty() {
        return 0;
    }
    let full = a.integer_rows();
    let mut m: Vec<Vec<GaussInt>> = full
        .into_iter()
        .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
        .collect();
    bareiss_rank(&mut m)
}

pub(crate) fn bareiss_rank(m: &mut [Vec<GaussInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = GaussInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = pivot.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[c] = GaussInt {
                re: BigInt::zero(),
                im: BigInt::zero(),
            };
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of `A[S]` by ordinary Gauss-Jordan elimination over the field `Q(i)`,
/// choosing pivots from the bottom row upwards and columns right to left.
///
/// Shares no code with [`linear_rank`]; used to cross-check it.
pub fn linear_rank_field(a: &GRMatrix, s: SubsetMask) -> usize {
    let cols: Vec<usize> = s.iter().filter(|&j| j < a.cols).rev().collect();
    let mut m: Vec<Vec<GaussianRational>> = (0..a.rows)
        .rev()
        .map(|i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<GaussianRational> = m[rank].iter().map(|z| z * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Exact rank of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<GaussInt>> = rows
        .iter()
        .map(|row| {
            let scale = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| GaussInt {
                    re: (q * BigRational::from_integer(scale.clone())).to_integer(),
                    im: BigInt::zero(),
                })
                .collect()
        })
        .collect();
    bareiss_rank(&mut m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_ranks() {
        let a = GRMatrix::identity(4).unwrap();
        assert_eq!(linear_rank(&a, SubsetMask::from_elements([0, 1, 2])), 3);
        assert_eq!(linear_rank(&a, SubsetMask::EMPTY), 0);
        assert_eq!(a.rank(), 4);
    }

    #[test]
    fn complex_dependency_detected() {
        // second column is i times the first
        let a = GRMatrix::from_rows(vec![
            vec![
                "1".parse().unwrap(),
                "i".parse().unwrap(),
                "0".parse().unwrap(),
            ],
            vec![
                "1+i".parse().unwrap(),
                "-1+i".parse().unwrap(),
                "1/3".parse().unwrap(),
            ],
        ])
        .unwrap();
        assert_eq!(linear_rank(&a, SubsetMask::from_elements([0, 1])), 1);
        assert_eq!(linear_rank(&a, SubsetMask::full(3)), 2);
        assert_eq!(linear_rank_field(&a, SubsetMask::from_elements([0, 1])), 1);
    }

    #[test]
    fn text_format() {
        let a = GRMatrix::parse_text("# comment\n1 0 3/2-1/3i\n\n0 i -i # tail\n").unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 3));
        assert_eq!(a.get(0, 2).to_string(), "3/2-1/3i");
        assert!(GRMatrix::parse_text("1 2\n3\n").is_err());
        assert!(GRMatrix::parse_text("1 x\n").is_err());
        assert!(GRMatrix::parse_text("\n# nothing\n").is_err());
    }

    #[test]
    fn json_format() {
        let a = GRMatrix::parse_json(r#"{"rows":[["3/2+1/3i", 0], [1, "i"]]}"#).unwrap();
        assert_eq!(a.get(0, 0).to_string(), "3/2+1/3i");
        assert_eq!(a.rank(), 2);
        assert!(GRMatrix::parse_json(r#"{"rows":[["q"]]}"#).is_err());
    }

    #[test]
    fn zero_column_found() {
        let a = GRMatrix::from_integers(&[[1, 0, 2], [3, 0, 4]]).unwrap();
        assert_eq!(a.zero_column(), Some(1));
    }

    #[test]
    fn rational_rank_small() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let rows = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]];
        assert_eq!(rational_rank(&rows), 1);
    }
}
