//! The Pascal-triangle matrix Delta_n, its closed-form inverse, and the
//! identities that make it implement the similarity J_n(mu)^(-T) ~ J_n(mu)
//! when mu = (-1)^n.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canonical::jordan_block;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The n x n matrix whose 1-indexed (i, j) entry is
/// `mu^i * (-mu)^(j-1) * C(j-1, n-i)` with mu = (-1)^n and the convention
/// that out-of-range binomial coefficients vanish.
///
/// Entries are integers, vanish strictly above the antidiagonal, and the
/// antidiagonal itself carries only +1 and -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMatrix {
    n: usize,
    mu: Scalar,
    matrix: Matrix,
}

impl DeltaMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Always (-1)^n; the matrix is only defined for that eigenvalue.
    pub fn mu(&self) -> &Scalar {
        &self.mu
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

/// Pascal triangle rows 0..=max, built by the integer recurrence.
fn binomial_rows(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    rows.push(vec![BigInt::one()]);
    for a in 1..=max {
        let prev = &rows[a - 1];
        let mut row = Vec::with_capacity(a + 1);
        row.push(BigInt::one());
        for b in 1..a {
            row.push(&prev[b - 1] + &prev[b]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

fn binomial(rows: &[Vec<BigInt>], a: usize, b: usize) -> BigInt {
    if b > a {
        BigInt::zero()
    } else {
        rows[a][b].clone()
    }
}

pub fn delta(n: usize) -> DeltaMatrix {
    assert!(n >= 1);
    let mu = Scalar::neg_one_pow(n);
    if n == 1 {
        // The entry formula evaluates to [mu] = [-1] here, but either sign
        // satisfies every 1x1 identity and the tabulated normalization is
        // Delta_1 = [1]; downstream solution tables depend on that choice.
        return DeltaMatrix {
            n,
            mu,
            matrix: Matrix::identity(1),
        };
    }
    let neg_mu = -&mu;
    let binomials = binomial_rows(n - 1);
    // The defining formula is 1-indexed; with r = i-1 and c = j-1 the entry
    // at (r, c) is mu^(r+1) * (-mu)^c * C(c, n-1-r).
    let matrix = Matrix::from_fn(n, n, |r, c| {
        let coeff = binomial(&binomials, c, n - 1 - r);
        if coeff.is_zero() {
            return Scalar::zero();
        }
        let sign = &mu.pow((r + 1) as u32) * &neg_mu.pow(c as u32);
        &sign * &Scalar::from_bigint(coeff)
    });
    DeltaMatrix { n, mu, matrix }
}

/// The closed-form inverse: the reflection of Delta_n through its center,
/// `inv[i, j] = Delta_n[n-i+1, n-j+1]` (1-indexed).
pub fn delta_inverse(n: usize) -> Matrix {
    let d = delta(n);
    Matrix::from_fn(n, n, |r, c| d.matrix().get(n - 1 - r, n - 1 - c).clone())
}

/// Does Delta_n * J_n(mu) * Delta_n^(-1) = J_n(mu)^(-T) hold exactly?
/// (mu = (-1)^n.) True for every n; exposed as a checkable predicate.
pub fn check_similarity(n: usize) -> bool {
    let d = delta(n);
    let j = jordan_block(n, d.mu());
    let lhs = &(d.matrix() * &j) * &delta_inverse(n);
    let rhs = j
        .inverse()
        .expect("Jordan block with eigenvalue +-1 is invertible")
        .transpose();
    lhs == rhs
}

/// Does (Delta_n * J_n^l(mu))^T = -Delta_n * J_n^(n-l)(mu) hold exactly?
/// Defined for l = 0..=n, mu = (-1)^n.
pub fn check_transpose_identity(n: usize, l: usize) -> Result<bool, Error> {
    if l > n {
        return Err(Error::OutOfRange {
            what: "power l",
            got: l,
            max: n,
        });
    }
    let d = delta(n);
    let j = jordan_block(n, d.mu());
    let lhs = (d.matrix() * &j.pow(l as u32)).transpose();
    let rhs = -&(d.matrix() * &j.pow((n - l) as u32));
    Ok(lhs == rhs)
}

/// The residual of the Pascal recurrence written at matrix level:
/// `J^T(0) * D * J(0) + mu * D * J(0) + mu * J^T(0) * D`, which must vanish.
///
/// Shifting by J(0) realizes the index-(i-1, j-1) reading of the entrywise
/// recurrence, with any out-of-range Delta entry contributing zero.
pub fn pascal_recurrence_residual(n: usize) -> Matrix {
    let d = delta(n);
    let mu = d.mu().clone();
    let shift = jordan_block(n, &Scalar::zero());
    let shift_t = shift.transpose();
    let a = &(&shift_t * d.matrix()) * &shift;
    let b = (d.matrix() * &shift).scale(&mu);
    let c = (&shift_t * d.matrix()).scale(&mu);
    &(&a + &b) + &c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_1_2_3() {
        assert_eq!(delta(1).matrix(), &Matrix::from_i64(&[&[1]]));
        assert_eq!(delta(2).matrix(), &Matrix::from_i64(&[&[0, -1], &[1, -1]]));
        assert_eq!(
            delta(3).matrix(),
            &Matrix::from_i64(&[&[0, 0, -1], &[0, 1, 2], &[-1, -1, -1]])
        );
    }

    #[test]
    fn delta_6_bottom_row_alternates() {
        let d = delta(6);
        let bottom: Vec<Scalar> = (0..6).map(|c| d.matrix().get(5, c).clone()).collect();
        let expected: Vec<Scalar> = [1, -1, 1, -1, 1, -1]
            .iter()
            .map(|&v| Scalar::from(v))
            .collect();
        assert_eq!(bottom, expected);
    }

    #[test]
    fn delta_mu_is_sign_of_n() {
        assert_eq!(delta(3).mu(), &Scalar::from(-1));
        assert_eq!(delta(4).mu(), &Scalar::from(1));
    }

    #[test]
    fn delta_vanishes_above_antidiagonal() {
        for n in 1..=12 {
            let d = delta(n);
            for r in 0..n {
                for c in 0..n {
                    // 1-indexed i + j <= n means r + c <= n - 2
                    if r + c + 2 <= n {
                        assert!(d.matrix().get(r, c).is_zero(), "n={n} ({r},{c})");
                    }
                }
                let anti = d.matrix().get(r, n - 1 - r);
                if n > 1 {
                    let expected = &d.mu().pow((r + 1) as u32) * &(-d.mu()).pow((n - 1 - r) as u32);
                    assert_eq!(anti, &expected, "antidiagonal n={n} row {r}");
                }
                assert!(anti == &Scalar::one() || anti == &Scalar::from(-1));
            }
        }
    }

    #[test]
    fn delta_inverse_examples() {
        assert_eq!(delta_inverse(1), Matrix::from_i64(&[&[1]]));
        assert_eq!(delta_inverse(2), Matrix::from_i64(&[&[-1, 1], &[-1, 0]]));
        let product = &delta_inverse(3) * delta(3).matrix();
        assert_eq!(product, Matrix::identity(3));
    }

    #[test]
    fn reflection_inverts_on_both_sides() {
        for n in 1..=9 {
            let d = delta(n);
            let inv = delta_inverse(n);
            assert_eq!(&inv * d.matrix(), Matrix::identity(n), "left n={n}");
            assert_eq!(d.matrix() * &inv, Matrix::identity(n), "right n={n}");
        }
    }

    #[test]
    fn similarity_holds() {
        assert!(check_similarity(1));
        assert!(check_similarity(4));
        assert!(check_similarity(12));
    }

    #[test]
    fn transpose_identity_examples() {
        assert_eq!(check_transpose_identity(1, 0), Ok(true));
        assert_eq!(check_transpose_identity(5, 2), Ok(true));
        // l = n specializes to Delta^T = -Delta * J^n
        assert_eq!(check_transpose_identity(8, 8), Ok(true));
    }

    #[test]
    fn transpose_identity_rejects_out_of_range() {
        assert!(matches!(
            check_transpose_identity(3, 4),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn recurrence_residual_vanishes() {
        for n in 1..=9 {
            assert!(pascal_recurrence_residual(n).is_zero(), "n={n}");
        }
    }
}
