//! Exact linear algebra over the rationals.
//!
//! Two independent rank routines are provided on purpose: plain Gaussian
//! elimination over `BigRational` ([`RationalMatrix::rank`]) and
//! fraction-free Bareiss elimination over `BigInt` ([`bareiss_rank`]).
//! Dimension answers that decide mathematical claims are cross-checked
//! between the two in the test suites. There are no thresholds and no
//! floating point anywhere.

use num::{BigInt, BigRational, Signed, Zero};

/// A dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    /// Reduces in place to reduced row echelon form; returns the pivot
    /// columns (so the rank is the length of the returned vector).
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let pivot = self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) / &pivot;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Dimension of the right kernel: `cols − rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Clears denominators row by row, returning an integer matrix with the
    /// same rank.
    pub fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::from(1), |acc, x| num::integer::lcm(acc, x.denom().abs()));
                self.row(r)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            writeln!(
                f,
                "[{}]",
                self.row(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
///
/// Intermediate entries are minors of the input, so every division is exact;
/// this is the independent route against [`RationalMatrix::rank`].
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    assert!(m.iter().all(|r| r.len() == cols), "ragged rows");

    let mut prev = BigInt::from(1);
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let num = &m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
    }
    pivot_row
}

/// An incrementally built row space in reduced echelon form.
///
/// Used for span/ideal computations: vectors are inserted one at a time and
/// the basis stays canonical (pivot entries 1, pivot columns cleared).
#[derive(Clone, Debug)]
pub struct RowSpan {
    cols: usize,
    /// Basis rows sorted by pivot column.
    basis: Vec<Vec<BigRational>>,
    /// Pivot column of each basis row.
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(cols: usize) -> Self {
        RowSpan {
            cols,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    /// Reduces `v` against the current basis, returning the remainder.
    pub fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &factor * y;
            }
        }
        v
    }

    /// True iff `v` lies in the span.
    pub fn contains(&self, v: Vec<BigRational>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts `v`; returns true if the dimension grew.
    pub fn insert(&mut self, v: Vec<BigRational>) -> bool {
        let mut rem = self.reduce(v);
        let Some(p) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = rem[p].clone();
        for x in rem.iter_mut() {
            *x /= &lead;
        }
        // Clear the new pivot column in the existing rows, then keep rows
        // ordered by pivot.
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&rem) {
                *x -= &factor * y;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, rem);
        true
    }
}
