use super::{Field, PrimeField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Result of Gaussian elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    /// Pivot column of each pivot row, in order.
    pub pivots: Vec<usize>,
    /// A basis of the right kernel, one vector per free column.
    pub kernel: Vec<Vec<u64>>,
}

impl MatrixFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatrixFp { field, rows, cols, data: vec![0; rows * cols] }
    }

    /// Panics on ragged input.
    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        let data = rows.into_iter().flatten().map(|x| field.reduce(x)).collect();
        MatrixFp { field, rows: n, cols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u64) {
        self.data[r * self.cols + c] = self.field.reduce(x);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[u64]) -> Result<Vec<u64>> {
        if x.len() != self.cols {
            return Err(Error::usage(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        let p = self.field.p() as u128;
        Ok((0..self.rows)
            .map(|r| {
                let acc = self
                    .row(r)
                    .iter()
                    .zip(x)
                    .fold(0u128, |s, (&a, &b)| (s + a as u128 * b as u128) % p);
                acc as u64
            })
            .collect())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Columns are scanned left to right and the first nonzero entry at or
    /// below the current row is taken as pivot, so the result is deterministic.
    fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(&self.get(r, c)).expect("nonzero pivot");
            for k in c..cols {
                let i = r * cols + k;
                self.data[i] = f.mul(&self.data[i], &inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for k in c..cols {
                    let sub = f.mul(&factor, &self.data[r * cols + k]);
                    let idx = i * cols + k;
                    self.data[idx] = f.sub(&self.data[idx], &sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn rank_and_kernel(&self) -> RankKernel {
        let mut m = self.clone();
        let pivots = m.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u64; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(&m.get(r, free));
                }
                v
            })
            .collect();
        RankKernel { rank: pivots.len(), pivots, kernel }
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::usage("determinant of a non-square matrix"));
        }
        let f = self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i * n + c] != 0) else {
                return Ok(0);
            };
            if pr != c {
                for k in 0..n {
                    a.swap(pr * n + k, c * n + k);
                }
                det = f.neg(&det);
            }
            let piv = a[c * n + c];
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(&a[i * n + c], &inv);
                if factor == 0 {
                    continue;
                }
                for k in c..n {
                    let sub = f.mul(&factor, &a[c * n + k]);
                    a[i * n + k] = f.sub(&a[i * n + k], &sub);
                }
            }
        }
        Ok(det)
    }
}
