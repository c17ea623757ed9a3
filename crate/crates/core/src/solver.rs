//! Closed-form solution bases for X * H_2n(mu) + H_2n(mu) * X^T = 0.
//!
//! Partition X conformally with H into n x n blocks [[A, B], [C, D]]. The
//! equation splits into four block equations, one per block:
//!
//!   B:  B*J + B^T    = 0
//!   A:  A + D^T      = 0
//!   D:  D*J + J*A^T  = 0
//!   C:  C + J*C^T    = 0
//!
//! For admissible mu != (-1)^n the off-diagonal blocks are forced to zero
//! and X = (-D^T) (+) D with D ranging over the upper-triangular Toeplitz
//! commutant of J. For mu = (-1)^n an extra ceil(n/2)-parameter family of
//! B blocks survives, built from the Pascal matrix Delta_n, and the C
//! blocks are their reflections C = R*B*R.

use std::fmt;

use crate::canonical::{jordan_block, CanonicalSpec};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::pascal::delta;
use crate::scalar::Scalar;

/// Which block family a basis element parametrizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisRole {
    /// X = (-(J^l)^T) (+) J^l.
    Diagonal(usize),
    /// Upper-right block only: the l-th Pascal-built B solution.
    BParam(usize),
    /// Lower-left block only: the reflected C = R*B*R solution.
    CParam(usize),
}

impl fmt::Display for BasisRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisRole::Diagonal(l) => write!(f, "diagonal({l})"),
            BasisRole::BParam(l) => write!(f, "b_param({l})"),
            BasisRole::CParam(l) => write!(f, "c_param({l})"),
        }
    }
}

/// Ordered basis of the solution space of X*H + H*X^T = 0 for one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionBasis {
    spec: CanonicalSpec,
    elements: Vec<Matrix>,
    roles: Vec<BasisRole>,
}

impl SolutionBasis {
    pub fn spec(&self) -> &CanonicalSpec {
        &self.spec
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn roles(&self) -> &[BasisRole] {
        &self.roles
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }
}

/// The powers J^0, J^1, ..., J^(n-1): a basis of the upper-triangular
/// Toeplitz matrices, which form the commutant of J_n(mu).
pub fn toeplitz_commutant_basis(n: usize, mu: &Scalar) -> Vec<Matrix> {
    assert!(n >= 1);
    let j = jordan_block(n, mu);
    let mut powers = Vec::with_capacity(n);
    let mut acc = Matrix::identity(n);
    for _ in 0..n {
        powers.push(acc.clone());
        acc = &acc * &j;
    }
    powers
}

/// The ceil(n/2) independent B-block solutions of B*J + B^T = 0 for
/// mu = (-1)^n: E_l = Delta_n * (J^l + J^(n-1-l)) for l = 0..ceil(n/2)-1.
///
/// For odd n the middle term degenerates to 2*Delta_n*J^l and is kept with
/// its factor 2 so the emitted matrices match the closed form verbatim.
pub fn b_block_basis(n: usize) -> Vec<Matrix> {
    assert!(n >= 1);
    let d = delta(n);
    let j = jordan_block(n, d.mu());
    let count = n.div_ceil(2);
    (0..count)
        .map(|l| {
            let sum = &j.pow(l as u32) + &j.pow((n - 1 - l) as u32);
            d.matrix() * &sum
        })
        .collect()
}

/// The matching C-block solutions of C + J*C^T = 0: each is R * E_l * R
/// with R the reversed identity.
pub fn c_block_basis(n: usize) -> Vec<Matrix> {
    let r = Matrix::reverse_identity(n);
    b_block_basis(n).iter().map(|e| &(&r * e) * &r).collect()
}

/// The dimension of the solution space: n + 2*ceil(n/2) when mu = (-1)^n,
/// n otherwise.
pub fn dimension(spec: &CanonicalSpec) -> usize {
    let n = spec.n();
    if spec.is_hard_case() {
        n + 2 * n.div_ceil(2)
    } else {
        n
    }
}

/// The explicit ordered basis of the solution space of X*H + H*X^T = 0.
///
/// Order: Diagonal(0..n), then, when mu = (-1)^n, BParam(0..ceil(n/2)) and
/// CParam(0..ceil(n/2)), each family by ascending index.
pub fn explicit_basis(spec: &CanonicalSpec) -> SolutionBasis {
    let n = spec.n();
    let zero = Matrix::zeros(n, n);
    let mut elements = Vec::with_capacity(dimension(spec));
    let mut roles = Vec::with_capacity(dimension(spec));

    for (l, d_block) in toeplitz_commutant_basis(n, spec.mu()).iter().enumerate() {
        elements.push(Matrix::direct_sum(&-&d_block.transpose(), d_block));
        roles.push(BasisRole::Diagonal(l));
    }

    if spec.is_hard_case() {
        for (l, b) in b_block_basis(n).iter().enumerate() {
            elements.push(Matrix::from_blocks_2x2(&zero, b, &zero, &zero));
            roles.push(BasisRole::BParam(l));
        }
        for (l, c) in c_block_basis(n).iter().enumerate() {
            elements.push(Matrix::from_blocks_2x2(&zero, &zero, c, &zero));
            roles.push(BasisRole::CParam(l));
        }
    }

    SolutionBasis {
        spec: spec.clone(),
        elements,
        roles,
    }
}

/// Linear combination sum(params[i] * basis[i]) over the explicit basis.
pub fn solution_from_params(spec: &CanonicalSpec, params: &[Scalar]) -> Result<Matrix, Error> {
    let basis = explicit_basis(spec);
    if params.len() != basis.dimension() {
        return Err(Error::ParamCountMismatch {
            expected: basis.dimension(),
            got: params.len(),
        });
    }
    let mut out = Matrix::zeros(2 * spec.n(), 2 * spec.n());
    for (p, e) in params.iter().zip(basis.elements()) {
        if !p.is_zero() {
            out = &out + &e.scale(p);
        }
    }
    Ok(out)
}

/// Residual of the defining equation: X*H + H*X^T.
pub fn equation_residual(x: &Matrix, h: &Matrix) -> Matrix {
    &(x * h) + &(h * &x.transpose())
}

/// Residuals of the four block equations (order: B, A, D, C) for a
/// conformally partitioned solution X = [[A, B], [C, D]] of the 2n x 2n
/// system.
pub fn block_residuals(x: &Matrix, spec: &CanonicalSpec) -> [Matrix; 4] {
    let n = spec.n();
    assert_eq!(x.rows(), 2 * n);
    assert_eq!(x.cols(), 2 * n);
    let j = jordan_block(n, spec.mu());
    let a = x.block(0, 0, n, n);
    let b = x.block(0, n, n, n);
    let c = x.block(n, 0, n, n);
    let d = x.block(n, n, n, n);
    [
        &(&b * &j) + &b.transpose(),
        &a + &d.transpose(),
        &(&d * &j) + &(&j * &a.transpose()),
        &c + &(&j * &c.transpose()),
    ]
}
