//! Bundled invariant suites.
//!
//! Each suite re-checks one module's stated invariants up to a size bound
//! and reports how many checks ran and which, if any, failed. The CLI
//! `verify` verb drives these; the test suites exercise the same code.

use crate::canonical::{cosquare, h_block, jordan_block, CanonicalSpec};
use crate::lie;
use crate::matrix::Matrix;
use crate::oracle;
use crate::pascal;
use crate::rref;
use crate::scalar::Scalar;
use crate::solver;

/// Outcome of one invariant suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// mu values probing the generic case: 2, 1/2, 3, and i.
fn easy_mu_values() -> Vec<Scalar> {
    vec![
        Scalar::from(2),
        Scalar::from_ratio(1, 2),
        Scalar::from(3),
        Scalar::i(),
    ]
}

fn hard_spec(n: usize) -> CanonicalSpec {
    CanonicalSpec::new(n, Scalar::neg_one_pow(n)).expect("(-1)^n is always admissible")
}

/// Defining identities of Delta_n: similarity, reflection inverse, the
/// transpose identity for every l, the entrywise recurrence residual, and
/// the triangular shape facts.
pub fn pascal_suite(n_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("pascal");
    for n in 1..=n_max {
        let d = pascal::delta(n);
        let inv = pascal::delta_inverse(n);
        report.check(
            &inv * d.matrix() == Matrix::identity(n) && d.matrix() * &inv == Matrix::identity(n),
            || format!("delta_inverse({n}) is not a two-sided inverse"),
        );
        report.check(pascal::check_similarity(n), || {
            format!("similarity identity fails at n={n}")
        });
        for l in 0..=n {
            report.check(pascal::check_transpose_identity(n, l) == Ok(true), || {
                format!("transpose identity fails at n={n}, l={l}")
            });
        }
        report.check(pascal::pascal_recurrence_residual(n).is_zero(), || {
            format!("recurrence residual nonzero at n={n}")
        });

        let mut shape_ok = true;
        for r in 0..n {
            for c in 0..n {
                if r + c + 2 <= n && !d.matrix().get(r, c).is_zero() {
                    shape_ok = false;
                }
            }
            let anti = d.matrix().get(r, n - 1 - r);
            if anti != &Scalar::one() && anti != &Scalar::from(-1) {
                shape_ok = false;
            }
        }
        report.check(shape_ok, || format!("triangular shape violated at n={n}"));
    }
    report
}

/// Closed-form basis invariants: the defining equation, the four block
/// equations, cosquare commutation, the intertwining relation for B blocks,
/// linear independence, and the dimension formula.
pub fn solver_suite(n_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("solver");
    let mut specs: Vec<CanonicalSpec> = (1..=n_max).map(hard_spec).collect();
    for n in 1..=n_max.min(5) {
        for mu in easy_mu_values() {
            specs.push(CanonicalSpec::new(n, mu).expect("probe mu is admissible"));
        }
    }

    for spec in &specs {
        let n = spec.n();
        let label = format!("n={n}, mu={}", spec.mu());
        let h = h_block(spec);
        let cs = cosquare(spec);
        let basis = solver::explicit_basis(spec);

        report.check(basis.dimension() == solver::dimension(spec), || {
            format!("dimension mismatch for {label}")
        });
        for (idx, x) in basis.elements().iter().enumerate() {
            report.check(solver::equation_residual(x, &h).is_zero(), || {
                format!("element {idx} violates the defining equation for {label}")
            });
            report.check(
                lie::bracket(x, &cs).map(|b| b.is_zero()) == Ok(true),
                || format!("element {idx} does not commute with the cosquare for {label}"),
            );
            report.check(
                solver::block_residuals(x, spec).iter().all(Matrix::is_zero),
                || format!("element {idx} violates a block equation for {label}"),
            );
        }
        let stacked = rref::stack_vectorized(basis.elements());
        report.check(rref::rank(&stacked) == basis.dimension(), || {
            format!("basis is linearly dependent for {label}")
        });

        if spec.is_hard_case() {
            let j = jordan_block(n, spec.mu());
            let j_inv_t = j.inverse().expect("invertible").transpose();
            for (l, b) in solver::b_block_basis(n).iter().enumerate() {
                report.check(b * &j == &j_inv_t * b, || {
                    format!("B element {l} fails the intertwining relation for {label}")
                });
            }
        }
    }
    report
}

/// Oracle-versus-closed-form equivalence: equal spans, the predicted
/// dimensions in both cases, and zero off-diagonal blocks in the generic
/// case. The n bound is capped at 8 (a 256 x 256 exact elimination).
pub fn oracle_suite(n_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("oracle");
    for n in 1..=n_max.min(8) {
        let spec = hard_spec(n);
        let basis = solver::explicit_basis(&spec);
        let kernel = oracle::oracle_basis(&h_block(&spec)).expect("admissible input");
        report.check(kernel.dimension() == n + 2 * n.div_ceil(2), || {
            format!("oracle dimension off in the hard case n={n}")
        });
        report.check(
            oracle::span_equal(kernel.elements(), basis.elements()) == Ok(true),
            || format!("oracle and closed form disagree in the hard case n={n}"),
        );
    }
    for n in 1..=n_max.min(5) {
        for mu in easy_mu_values() {
            let spec = CanonicalSpec::new(n, mu.clone()).expect("probe mu is admissible");
            let basis = solver::explicit_basis(&spec);
            let kernel = oracle::oracle_basis(&h_block(&spec)).expect("admissible input");
            report.check(kernel.dimension() == n, || {
                format!("oracle dimension off for n={n}, mu={mu}")
            });
            let off_diagonal_zero = kernel
                .elements()
                .iter()
                .all(|x| x.block(0, n, n, n).is_zero() && x.block(n, 0, n, n).is_zero());
            report.check(off_diagonal_zero, || {
                format!("oracle solution has nonzero B or C block for n={n}, mu={mu}")
            });
            report.check(
                oracle::span_equal(kernel.elements(), basis.elements()) == Ok(true),
                || format!("oracle and closed form disagree for n={n}, mu={mu}"),
            );
        }
    }
    report
}

/// Lie-algebra invariants over the closed-form bases: bracket closure,
/// structure constants that re-expand to the exact brackets, antisymmetry,
/// and the Jacobi identity. The n bound is capped at 6.
pub fn lie_suite(n_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("lie");
    for n in 1..=n_max.min(6) {
        for spec in [
            hard_spec(n),
            CanonicalSpec::new(n, Scalar::from(2)).unwrap(),
        ] {
            let label = format!("n={n}, mu={}", spec.mu());
            let basis = solver::explicit_basis(&spec);
            report.check(lie::closure_check(basis.elements()) == Ok(true), || {
                format!("closure fails for {label}")
            });
            let sc = match lie::structure_constants(basis.elements()) {
                Ok(sc) => sc,
                Err(e) => {
                    report.check(false, || {
                        format!("structure constants fail for {label}: {e}")
                    });
                    continue;
                }
            };
            report.check(sc.antisymmetry_holds(), || {
                format!("antisymmetry fails for {label}")
            });
            report.check(sc.jacobi_holds(), || format!("Jacobi fails for {label}"));
            let mut expansion_ok = true;
            for i in 0..sc.dim() {
                for j in 0..sc.dim() {
                    let direct = lie::bracket(&basis.elements()[i], &basis.elements()[j])
                        .expect("square same-shape elements");
                    if sc.expand_bracket(basis.elements(), i, j) != direct {
                        expansion_ok = false;
                    }
                }
            }
            report.check(expansion_ok, || {
                format!("tensor does not reproduce brackets for {label}")
            });
        }
    }
    report
}

/// Runs every suite at the given bound, in a fixed order.
pub fn run_all(n_max: usize) -> Vec<SuiteReport> {
    vec![
        pascal_suite(n_max),
        solver_suite(n_max),
        oracle_suite(n_max),
        lie_suite(n_max),
    ]
}
