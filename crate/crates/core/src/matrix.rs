//! Dense, immutable matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::rref;
use crate::scalar::Scalar;

/// Dense row-major matrix with exact scalar entries and value semantics.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from an entry generator, row by row.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer matrix literal, mostly for tests and fixed tables.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// The reversed identity: ones on the antidiagonal.
    pub fn reverse_identity(n: usize) -> Self {
        assert!(n >= 1);
        Matrix::from_fn(n, n, |r, c| {
            if r + c == n - 1 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// k-th power of a square matrix.
    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square(), "pow requires a square matrix");
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Copies the `height x width` block with upper-left corner (r0, c0).
    pub fn block(&self, r0: usize, c0: usize, height: usize, width: usize) -> Matrix {
        assert!(r0 + height <= self.rows && c0 + width <= self.cols);
        Matrix::from_fn(height, width, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Assembles `[[a, b], [c, d]]` from four equally-shaped square blocks.
    pub fn from_blocks_2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        let n = a.rows;
        for m in [a, b, c, d] {
            assert!(m.rows == n && m.cols == n, "blocks must be n x n");
        }
        Matrix::from_fn(2 * n, 2 * n, |r, c2| {
            let (br, r2) = (r / n, r % n);
            let (bc, c3) = (c2 / n, c2 % n);
            match (br, bc) {
                (0, 0) => a.get(r2, c3).clone(),
                (0, 1) => b.get(r2, c3).clone(),
                (1, 0) => c.get(r2, c3).clone(),
                _ => d.get(r2, c3).clone(),
            }
        })
    }

    /// Block-diagonal sum `a (+) b`.
    pub fn direct_sum(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, |r, c| {
            if r < a.rows && c < a.cols {
                a.get(r, c).clone()
            } else if r >= a.rows && c >= a.cols {
                b.get(r - a.rows, c - a.cols).clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack requires equal row counts");
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        })
    }

    /// Column-stacking vectorization: the (rows*cols) x 1 vector with
    /// `vec(X)[j*rows + i] = X[i, j]`.
    pub fn vec_cols(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows * self.cols,
            cols: 1,
            entries,
        }
    }

    /// Inverse of `vec_cols`: folds a (rows*cols) x 1 vector back into a matrix.
    pub fn devec(v: &Matrix, rows: usize, cols: usize) -> Matrix {
        assert!(v.cols == 1 && v.rows == rows * cols, "devec shape mismatch");
        Matrix::from_fn(rows, cols, |r, c| v.get(c * rows + r, 0).clone())
    }

    /// Kronecker product; shape (m*p) x (n*q).
    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
            a.get(r / b.rows, c / b.cols) * b.get(r % b.rows, c % b.cols)
        })
    }

    /// The commutation (vec-permutation) matrix K with
    /// `K * vec(X) = vec(X^T)` for every m x n matrix X.
    pub fn commutation_matrix(m: usize, n: usize) -> Matrix {
        assert!(m >= 1 && n >= 1);
        let mut k = Matrix::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                // vec(X^T) coordinate i*n + j picks up vec(X) coordinate j*m + i.
                k.entries[(i * n + j) * (m * n) + (j * m + i)] = Scalar::one();
            }
        }
        k
    }

    /// Exact inverse by Gauss-Jordan elimination of `[self | I]`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::NonSquareInput {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let result = rref::rref(&aug);
        // Invertible exactly when all n pivots land in the left half.
        if result.pivot_columns.iter().filter(|&&c| c < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(result.rref.block(0, n, n, n))
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in add"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in sub"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    /// Aligned plain-text grid, one `[ ... ]` row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let mut widths = vec![0usize; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                widths[c] = widths[c].max(rendered[r * self.cols + c].len());
            }
        }
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                write!(f, " {:>w$}", rendered[r * self.cols + c], w = widths[c])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
