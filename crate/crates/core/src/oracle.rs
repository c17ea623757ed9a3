//! Brute-force ground truth: the solution space of X*A + A*X^T = 0 for an
//! arbitrary square A, computed by vectorizing the equation and taking an
//! exact null space. Nothing here knows about canonical forms, so it serves
//! as an independent check on every closed-form claim.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rref;

/// Default cap on the side length of A. The vectorized system is N^2 x N^2
/// and exact elimination on it grows fast; beyond the cap we fail loudly
/// rather than grind.
pub const DEFAULT_SIZE_LIMIT: usize = 24;

/// The vectorized form of X*A + A*X^T = 0: an N^2 x N^2 system S with
/// S * vec(X) = vec(X*A + A*X^T) for every N x N matrix X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorizedSystem {
    a: Matrix,
    system: Matrix,
}

impl VectorizedSystem {
    pub fn input(&self) -> &Matrix {
        &self.a
    }

    pub fn system(&self) -> &Matrix {
        &self.system
    }
}

/// Kernel basis of the vectorized system, devectorized back to N x N
/// matrices in the canonical RREF kernel order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    elements: Vec<Matrix>,
}

impl KernelBasis {
    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }
}

fn check_input(a: &Matrix, limit: usize) -> Result<usize, Error> {
    if !a.is_square() {
        return Err(Error::NonSquareInput {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() > limit {
        return Err(Error::SizeLimit {
            size: a.rows(),
            limit,
        });
    }
    Ok(a.rows())
}

/// Builds S = (A^T (x) I) + (I (x) A) * K with K the commutation matrix,
/// using the column-stacking vec convention throughout.
pub fn vectorized_system_with_limit(a: &Matrix, limit: usize) -> Result<VectorizedSystem, Error> {
    let n = check_input(a, limit)?;
    let identity = Matrix::identity(n);
    let k = Matrix::commutation_matrix(n, n);
    let left = Matrix::kron(&a.transpose(), &identity);
    let right = &Matrix::kron(&identity, a) * &k;
    Ok(VectorizedSystem {
        a: a.clone(),
        system: &left + &right,
    })
}

pub fn vectorized_system(a: &Matrix) -> Result<VectorizedSystem, Error> {
    vectorized_system_with_limit(a, DEFAULT_SIZE_LIMIT)
}

/// Exact basis of {X : X*A + A*X^T = 0} by null-space computation.
pub fn oracle_basis_with_limit(a: &Matrix, limit: usize) -> Result<KernelBasis, Error> {
    let n = check_input(a, limit)?;
    let vs = vectorized_system_with_limit(a, limit)?;
    let elements = rref::null_space(vs.system())
        .iter()
        .map(|v| Matrix::devec(v, n, n))
        .collect();
    Ok(KernelBasis { elements })
}

pub fn oracle_basis(a: &Matrix) -> Result<KernelBasis, Error> {
    oracle_basis_with_limit(a, DEFAULT_SIZE_LIMIT)
}

/// Do two lists of equally-shaped matrices span the same subspace?
/// Decided exactly by three rank computations.
pub fn span_equal(b1: &[Matrix], b2: &[Matrix]) -> Result<bool, Error> {
    if b1.is_empty() && b2.is_empty() {
        return Ok(true);
    }
    let shape_of = |m: &Matrix| (m.rows(), m.cols());
    let reference = shape_of(b1.first().or_else(|| b2.first()).unwrap());
    for m in b1.iter().chain(b2) {
        if shape_of(m) != reference {
            return Err(Error::ShapeMismatch {
                left: reference,
                right: shape_of(m),
            });
        }
    }
    let rank_of = |mats: &[Matrix]| {
        if mats.is_empty() {
            0
        } else {
            rref::rank(&rref::stack_vectorized(mats))
        }
    };
    let r1 = rank_of(b1);
    let r2 = rank_of(b2);
    if r1 != r2 {
        return Ok(false);
    }
    let union: Vec<Matrix> = b1.iter().chain(b2).cloned().collect();
    Ok(rank_of(&union) == r1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{h_block, CanonicalSpec};
    use crate::scalar::Scalar;
    use crate::solver;

    fn h(n: usize, mu: i64) -> Matrix {
        h_block(&CanonicalSpec::new(n, Scalar::from(mu)).unwrap())
    }

    #[test]
    fn zero_1x1_input_has_full_kernel() {
        let a = Matrix::zeros(1, 1);
        let vs = vectorized_system(&a).unwrap();
        assert_eq!(vs.system(), &Matrix::zeros(1, 1));
        assert_eq!(oracle_basis(&a).unwrap().dimension(), 1);
    }

    #[test]
    fn identity_input_yields_skew_symmetric_solutions() {
        let basis = oracle_basis(&Matrix::identity(2)).unwrap();
        assert_eq!(basis.dimension(), 1);
        let x = &basis.elements()[0];
        assert!((x + &x.transpose()).is_zero());
        for n in 2..=4 {
            let b = oracle_basis(&Matrix::identity(n)).unwrap();
            assert_eq!(b.dimension(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn system_matches_residual_entrywise() {
        let a = h(2, 1);
        let vs = vectorized_system(&a).unwrap();
        let x = Matrix::from_i64(&[
            &[3, -1, 2, 7],
            &[0, 5, -4, 1],
            &[2, 2, 9, -3],
            &[-6, 1, 0, 8],
        ]);
        let lhs = vs.system() * &x.vec_cols();
        let rhs = solver::equation_residual(&x, &a).vec_cols();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hard_case_n1_dimension() {
        assert_eq!(oracle_basis(&h(1, -1)).unwrap().dimension(), 3);
    }

    #[test]
    fn easy_case_n3_dimension() {
        assert_eq!(oracle_basis(&h(3, 2)).unwrap().dimension(), 3);
    }

    #[test]
    fn kernel_elements_solve_the_equation() {
        let a = h(2, 1);
        let basis = oracle_basis(&a).unwrap();
        // hard case at n = 2: dimension n + 2*ceil(n/2) = 4
        assert_eq!(basis.dimension(), 4);
        for x in basis.elements() {
            assert!(solver::equation_residual(x, &a).is_zero());
        }
    }

    #[test]
    fn rejects_non_square_input() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(
            oracle_basis(&a),
            Err(Error::NonSquareInput { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn rejects_oversized_input() {
        let a = Matrix::identity(4);
        assert_eq!(
            oracle_basis_with_limit(&a, 3),
            Err(Error::SizeLimit { size: 4, limit: 3 })
        );
    }

    #[test]
    fn oracle_accepts_inadmissible_mu() {
        // mu = (-1)^(n+1) is rejected by the canonical constructors but is a
        // legitimate brute-force input; build H directly.
        let n = 2;
        let j = crate::canonical::jordan_block(n, &Scalar::from(-1));
        let zero = Matrix::zeros(n, n);
        let a = Matrix::from_blocks_2x2(&zero, &Matrix::identity(n), &j, &zero);
        let basis = oracle_basis(&a).unwrap();
        assert!(basis.dimension() > 0);
        for x in basis.elements() {
            assert!(solver::equation_residual(x, &a).is_zero());
        }
    }

    #[test]
    fn span_equal_basics() {
        let e11_matrix = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let e11 = std::slice::from_ref(&e11_matrix);
        let e12 = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let doubled = e11_matrix.scale(&Scalar::from(2));
        assert_eq!(span_equal(e11, e11), Ok(true));
        assert_eq!(span_equal(e11, &[doubled]), Ok(true));
        assert_eq!(span_equal(e11, &[e12]), Ok(false));
        assert_eq!(span_equal(&[], &[]), Ok(true));
        assert_eq!(span_equal(e11, &[]), Ok(false));
        assert_eq!(span_equal(e11, &[Matrix::zeros(2, 2)]), Ok(false));
        assert!(matches!(
            span_equal(e11, &[Matrix::zeros(3, 3)]),
            Err(Error::ShapeMismatch { .. })
        ));
    }
}
