//! Reduced row echelon form and canonical kernel bases over the exact field.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Outcome of reducing a matrix to reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: Matrix,
    /// Columns holding a pivot, in ascending order.
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form by Gauss-Jordan elimination.
///
/// Pivots are chosen leftmost-first, taking the topmost nonzero entry at or
/// below the current row. Exact arithmetic needs no stability pivoting, so
/// the elimination order is fixed and the output deterministic (it is the
/// unique RREF of the input over the field).
pub fn rref(m: &Matrix) -> RrefResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivot_row, found);

        let inv = work[pivot_row][col]
            .inverse()
            .expect("pivot entry is nonzero");
        if !inv.is_one() {
            for entry in &mut work[pivot_row][col..] {
                if !entry.is_zero() {
                    *entry = &*entry * &inv;
                }
            }
        }

        for r in 0..rows {
            if r == pivot_row || work[r][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut work[r][col], Scalar::zero());
            let (pivot_slice, target_slice) = if r < pivot_row {
                let (head, tail) = work.split_at_mut(pivot_row);
                (&tail[0][col + 1..], &mut head[r][col + 1..])
            } else {
                let (head, tail) = work.split_at_mut(r);
                (&head[pivot_row][col + 1..], &mut tail[0][col + 1..])
            };
            for (target, pivot_entry) in target_slice.iter_mut().zip(pivot_slice) {
                if !pivot_entry.is_zero() {
                    *target = &*target - &(&factor * pivot_entry);
                }
            }
        }

        pivot_columns.push(col);
        pivot_row += 1;
    }

    let rank = pivot_columns.len();
    let rref = Matrix::from_rows(work);
    RrefResult {
        rref,
        pivot_columns,
        rank,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Canonical kernel basis read off the RREF.
///
/// One column vector per free column, in ascending free-column order; each
/// vector carries entry 1 in its own free coordinate. Empty when the kernel
/// is trivial.
pub fn null_space(m: &Matrix) -> Vec<Matrix> {
    let result = rref(m);
    let cols = m.cols();
    let pivot_of_row: Vec<usize> = result.pivot_columns.clone();
    let is_pivot = {
        let mut flags = vec![false; cols];
        for &c in &pivot_of_row {
            flags[c] = true;
        }
        flags
    };

    let mut basis = Vec::with_capacity(cols - result.rank);
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (row, &pcol) in pivot_of_row.iter().enumerate() {
            let coeff = result.rref.get(row, free);
            if !coeff.is_zero() {
                v[pcol] = -coeff;
            }
        }
        basis.push(Matrix::from_rows(v.into_iter().map(|s| vec![s]).collect()));
    }
    basis
}

/// Stacks matrices as rows of vectorized entries: one row per matrix.
///
/// All inputs must share a shape. This is the working representation for
/// span and independence questions about sets of matrices.
pub fn stack_vectorized(mats: &[Matrix]) -> Matrix {
    assert!(!mats.is_empty(), "cannot stack an empty list");
    let (r, c) = (mats[0].rows(), mats[0].cols());
    assert!(
        mats.iter().all(|m| m.rows() == r && m.cols() == c),
        "stacked matrices must share a shape"
    );
    Matrix::from_fn(mats.len(), r * c, |i, j| mats[i].get(j / c, j % c).clone())
}
