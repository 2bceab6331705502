//! Dense matrices over exact rationals, just large enough to take ranks.
//!
//! Row elimination skips zero multipliers, so matrices with permutation-like
//! sparsity (the usual case here) stay cheap even at a few hundred rows.

use num::{BigRational, Zero};

/// A dense row-major matrix over `BigRational`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from explicit rows. All rows must share one length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RatMatrix {
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

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank over the rationals by Gaussian elimination. Consumes the matrix.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            // Find a pivot in this column at or below pivot_row.
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            // Eliminate below. Rows with a zero multiplier are untouched and
            // zero entries of the pivot row are skipped outright.
            let pivot = self.get(pivot_row, col).clone();
            for r in (pivot_row + 1)..self.rows {
                if self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col) / &pivot;
                for c in col..self.cols {
                    let p = self.get(pivot_row, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &factor * p;
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
            rank += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}
