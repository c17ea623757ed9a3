//! Lie-algebra layer over solution bases: bracket, closure, and structure
//! constants.
//!
//! Functions here take plain matrix slices, so bases produced by the
//! closed-form solver and by the brute-force oracle interoperate.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rref;
use crate::scalar::Scalar;

/// The commutator [X, Y] = X*Y - Y*X.
pub fn bracket(x: &Matrix, y: &Matrix) -> Result<Matrix, Error> {
    if !x.is_square() {
        return Err(Error::NonSquareInput {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch {
            left: (x.rows(), x.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    Ok(&(x * y) - &(y * x))
}

/// All pairwise brackets [b_i, b_j] with i < j.
fn pairwise_brackets(basis: &[Matrix]) -> Result<Vec<(usize, usize, Matrix)>, Error> {
    let mut out = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            out.push((i, j, bracket(&basis[i], &basis[j])?));
        }
    }
    Ok(out)
}

/// True iff every pairwise bracket stays inside the span of the basis
/// (appending the brackets does not grow the rank).
pub fn closure_check(basis: &[Matrix]) -> Result<bool, Error> {
    if basis.len() < 2 {
        return Ok(true);
    }
    let base_rank = rref::rank(&rref::stack_vectorized(basis));
    let mut extended: Vec<Matrix> = basis.to_vec();
    for (_, _, b) in pairwise_brackets(basis)? {
        extended.push(b);
    }
    Ok(rref::rank(&rref::stack_vectorized(&extended)) == base_rank)
}

/// The rank-3 tensor c with [b_i, b_j] = sum_k c[i][j][k] * b_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    coeffs: Vec<Scalar>, // flat dim^3, index (i*dim + j)*dim + k
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        assert!(i < self.dim && j < self.dim && k < self.dim);
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        self.coeffs[(i * self.dim + j) * self.dim + k] = value;
    }

    /// c[i][j][k] = -c[j][i][k] for all indices (so the diagonal vanishes).
    pub fn antisymmetry_holds(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if *self.get(i, j, k) != -self.get(j, i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The Jacobi identity in tensor form: for all i, j, k, l,
    /// sum_m (c[j][k][m] c[i][m][l] + c[k][i][m] c[j][m][l]
    ///        + c[i][j][m] c[k][m][l]) = 0.
    pub fn jacobi_holds(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut sum = Scalar::zero();
                        for m in 0..d {
                            sum = &sum + &(self.get(j, k, m) * self.get(i, m, l));
                            sum = &sum + &(self.get(k, i, m) * self.get(j, m, l));
                            sum = &sum + &(self.get(i, j, m) * self.get(k, m, l));
                        }
                        if !sum.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Rebuilds [b_i, b_j] from the tensor: sum_k c[i][j][k] * basis[k].
    pub fn expand_bracket(&self, basis: &[Matrix], i: usize, j: usize) -> Matrix {
        assert_eq!(basis.len(), self.dim);
        let (rows, cols) = (basis[0].rows(), basis[0].cols());
        let mut out = Matrix::zeros(rows, cols);
        for (k, b) in basis.iter().enumerate() {
            let c = self.get(i, j, k);
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    /// Nonzero entries with i < j, in lexicographic (i, j, k) order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in 0..self.dim {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Computes the unique structure constants of a linearly independent,
/// bracket-closed basis by one exact elimination.
///
/// The basis vectors become the leading columns of an augmented system and
/// every pairwise bracket a trailing column; after RREF the trailing columns
/// read off the coordinates directly. A pivot landing in a trailing column
/// means that bracket left the span.
pub fn structure_constants(basis: &[Matrix]) -> Result<StructureConstants, Error> {
    let dim = basis.len();
    let mut sc = StructureConstants {
        dim,
        coeffs: vec![Scalar::zero(); dim * dim * dim],
    };
    if dim == 0 {
        return Ok(sc);
    }

    let brackets = pairwise_brackets(basis)?;
    let (rows, cols) = (basis[0].rows(), basis[0].cols());
    let vec_len = rows * cols;
    let total_cols = dim + brackets.len();
    let augmented = Matrix::from_fn(vec_len, total_cols, |r, c| {
        let m = if c < dim {
            &basis[c]
        } else {
            &brackets[c - dim].2
        };
        // column c is vec(m) in column-stacking order
        m.get(r % rows, r / rows).clone()
    });

    let result = rref::rref(&augmented);
    for &p in &result.pivot_columns {
        if p >= dim {
            let (i, j, _) = brackets[p - dim];
            return Err(Error::NotClosed { i, j });
        }
    }
    if result.rank < dim {
        return Err(Error::DependentBasis);
    }

    for (t, &(i, j, _)) in brackets.iter().enumerate() {
        for (row, &pivot_col) in result.pivot_columns.iter().enumerate() {
            let c = result.rref.get(row, dim + t).clone();
            sc.set(i, j, pivot_col, c.clone());
            sc.set(j, i, pivot_col, -&c);
        }
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::CanonicalSpec;
    use crate::solver::explicit_basis;

    #[test]
    fn bracket_of_equal_arguments_vanishes() {
        let x = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert!(bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn bracket_with_identity_vanishes() {
        let y = Matrix::from_i64(&[&[0, 7], &[-2, 5]]);
        assert!(bracket(&Matrix::identity(2), &y).unwrap().is_zero());
    }

    #[test]
    fn bracket_2x2_example() {
        let x = Matrix::from_i64(&[&[-1, 0], &[0, 1]]);
        let y = Matrix::from_i64(&[&[0, 2], &[0, 0]]);
        assert_eq!(
            bracket(&x, &y).unwrap(),
            Matrix::from_i64(&[&[0, -4], &[0, 0]])
        );
    }

    #[test]
    fn bracket_shape_errors() {
        let x = Matrix::zeros(2, 3);
        assert!(matches!(bracket(&x, &x), Err(Error::NonSquareInput { .. })));
        let a = Matrix::identity(2);
        let b = Matrix::identity(3);
        assert!(matches!(bracket(&a, &b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn singleton_basis_is_closed() {
        assert_eq!(closure_check(&[Matrix::identity(2)]), Ok(true));
    }

    #[test]
    fn non_algebra_set_fails_closure() {
        // [e12, e23] = e13 is outside span{e12, e23}
        let e12 = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let e23 = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(closure_check(&[e12.clone(), e23.clone()]), Ok(false));
        assert_eq!(
            structure_constants(&[e12, e23]),
            Err(Error::NotClosed { i: 0, j: 1 })
        );
    }

    #[test]
    fn solution_basis_is_closed() {
        let spec = CanonicalSpec::new(1, Scalar::from(-1)).unwrap();
        let basis = explicit_basis(&spec);
        assert_eq!(closure_check(basis.elements()), Ok(true));
    }

    #[test]
    fn abelian_basis_has_zero_tensor() {
        // commuting diagonal blocks
        let d1 = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let d2 = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let sc = structure_constants(&[d1, d2]).unwrap();
        assert!(sc.coeffs.iter().all(Scalar::is_zero));
    }

    #[test]
    fn structure_constants_reproduce_brackets() {
        let spec = CanonicalSpec::new(1, Scalar::from(-1)).unwrap();
        let basis = explicit_basis(&spec);
        let sc = structure_constants(basis.elements()).unwrap();
        assert!(sc.antisymmetry_holds());
        assert!(sc.jacobi_holds());
        for i in 0..sc.dim() {
            for j in 0..sc.dim() {
                let direct = bracket(&basis.elements()[i], &basis.elements()[j]).unwrap();
                assert_eq!(sc.expand_bracket(basis.elements(), i, j), direct);
            }
        }
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let e11 = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let doubled = e11.scale(&Scalar::from(2));
        assert_eq!(
            structure_constants(&[e11, doubled]),
            Err(Error::DependentBasis)
        );
    }
}
