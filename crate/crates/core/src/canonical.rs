//! Jordan blocks, Type-II canonical blocks, and the cosquare.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The pair (n, mu) identifying an admissible Type-II block.
///
/// Validity is enforced at construction: n >= 1 and 0 != mu != (-1)^(n+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSpec {
    n: usize,
    mu: Scalar,
}

impl CanonicalSpec {
    pub fn new(n: usize, mu: Scalar) -> Result<Self, Error> {
        if n == 0 || mu.is_zero() || mu == Scalar::neg_one_pow(n + 1) {
            return Err(Error::InvalidCanonicalParameter {
                n,
                mu: mu.to_string(),
            });
        }
        Ok(CanonicalSpec { n, mu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Scalar {
        &self.mu
    }

    /// True when mu = (-1)^n, the case where off-diagonal solution blocks
    /// survive and the Pascal-matrix machinery is needed.
    pub fn is_hard_case(&self) -> bool {
        self.mu == Scalar::neg_one_pow(self.n)
    }
}

/// The n x n upper-triangular Jordan block: mu on the diagonal, ones on the
/// first superdiagonal. mu = 0 is allowed here; the exclusions for canonical
/// blocks apply to [`h_block`], not to Jordan blocks themselves.
pub fn jordan_block(n: usize, mu: &Scalar) -> Matrix {
    assert!(n >= 1);
    Matrix::from_fn(n, n, |r, c| {
        if r == c {
            mu.clone()
        } else if c == r + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// The 2n x 2n Type-II canonical block `[[0, I], [J_n(mu), 0]]`.
pub fn h_block(spec: &CanonicalSpec) -> Matrix {
    let n = spec.n();
    let zero = Matrix::zeros(n, n);
    Matrix::from_blocks_2x2(
        &zero,
        &Matrix::identity(n),
        &jordan_block(n, spec.mu()),
        &zero,
    )
}

/// The cosquare H * H^(-T), computed exactly as the block-diagonal sum
/// J_n(mu)^(-T) (+) J_n(mu). Every solution of X*H + H*X^T = 0 commutes
/// with it.
///
/// Multiplying out H * H^(-T) puts the inverse-transpose block first; the
/// solutions commute with this product (not with the block-swapped sum, as
/// the intertwining relation for the B block shows).
pub fn cosquare(spec: &CanonicalSpec) -> Matrix {
    let j = jordan_block(spec.n(), spec.mu());
    let j_inv_t = j
        .inverse()
        .expect("Jordan block with nonzero eigenvalue is invertible")
        .transpose();
    Matrix::direct_sum(&j_inv_t, &j)
}
