//! Command-line front end: constructs canonical blocks and Pascal matrices,
//! emits closed-form solution bases, runs the brute-force oracle, and checks
//! the bundled invariant suites.
//!
//! Exit status: 0 on success, 1 on domain errors (inadmissible parameters,
//! unreadable input, failed verification), 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use matlie::canonical::{h_block, jordan_block, CanonicalSpec};
use matlie::json;
use matlie::lie;
use matlie::oracle;
use matlie::pascal;
use matlie::solver;
use matlie::verify;
use matlie::{Matrix, Scalar};

#[derive(Parser)]
#[command(
    name = "matlie",
    version,
    about = "Exact solver for the matrix equation X*A + A*X^T = 0 on Type-II canonical blocks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n x n Pascal-derived matrix Delta_n
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Jordan block J_n(mu)
    Jordan {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Scalar,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Type-II canonical block H_2n(mu)
    Hblock {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Scalar,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit the closed-form solution basis of X*H + H*X^T = 0
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Scalar,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the solution-space dimension for (n, mu)
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Scalar,
    },
    /// Brute-force the solution basis for an arbitrary square matrix read
    /// from a JSON file
    Oracle {
        /// Path to a matrix JSON document
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Size cap for the exact kernel computation
        #[arg(long, default_value_t = oracle::DEFAULT_SIZE_LIMIT)]
        limit: usize,
    },
    /// Cross-check the closed form against the brute-force oracle
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Scalar,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Structure constants of the solution Lie algebra
    Structure {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Scalar,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the invariant suites up to a size bound
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

fn print_matrix(m: &Matrix, format: Format) {
    match format {
        Format::Text => print!("{m}"),
        Format::Json => println!("{}", json::matrix_to_json(m)),
    }
}

fn run(command: Command) -> Result<(), Box<dyn std::error::Error>> {
    match command {
        Command::Delta { n, format } => {
            if n == 0 {
                return Err("n must be >= 1".into());
            }
            print_matrix(pascal::delta(n).matrix(), format);
        }
        Command::Jordan { n, mu, format } => {
            // mu = 0 is meaningful here (the nilpotent block), so no
            // canonical admissibility check.
            if n == 0 {
                return Err("n must be >= 1".into());
            }
            print_matrix(&jordan_block(n, &mu), format);
        }
        Command::Hblock { n, mu, format } => {
            let spec = CanonicalSpec::new(n, mu)?;
            print_matrix(&h_block(&spec), format);
        }
        Command::Basis { n, mu, format } => {
            let spec = CanonicalSpec::new(n, mu)?;
            let basis = solver::explicit_basis(&spec);
            match format {
                Format::Json => println!("{}", json::basis_to_json(&basis)),
                Format::Text => {
                    println!("dimension: {}", basis.dimension());
                    for (role, element) in basis.roles().iter().zip(basis.elements()) {
                        println!("{role}:");
                        print!("{element}");
                    }
                }
            }
        }
        Command::Dim { n, mu } => {
            let spec = CanonicalSpec::new(n, mu)?;
            println!("{}", solver::dimension(&spec));
        }
        Command::Oracle {
            input,
            format,
            limit,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let a = json::matrix_from_json(&text)?;
            let kernel = oracle::oracle_basis_with_limit(&a, limit)?;
            match format {
                Format::Json => println!("{}", json::kernel_to_json(&kernel)),
                Format::Text => {
                    println!("dimension: {}", kernel.dimension());
                    for element in kernel.elements() {
                        println!();
                        print!("{element}");
                    }
                }
            }
        }
        Command::Compare { n, mu, format } => {
            let spec = CanonicalSpec::new(n, mu)?;
            let basis = solver::explicit_basis(&spec);
            let kernel = oracle::oracle_basis(&h_block(&spec))?;
            let equal = oracle::span_equal(kernel.elements(), basis.elements())?;
            let dim_match = kernel.dimension() == basis.dimension();
            match format {
                Format::Text => {
                    println!("span_equal: {}, dim: {}", equal, basis.dimension())
                }
                Format::Json => println!(
                    r#"{{"span_equal":{},"closed_form_dimension":{},"oracle_dimension":{}}}"#,
                    equal,
                    basis.dimension(),
                    kernel.dimension()
                ),
            }
            if !equal || !dim_match {
                return Err("closed form and oracle disagree".into());
            }
        }
        Command::Structure { n, mu, format } => {
            let spec = CanonicalSpec::new(n, mu)?;
            let basis = solver::explicit_basis(&spec);
            let sc = lie::structure_constants(basis.elements())?;
            match format {
                Format::Json => println!("{}", json::structure_constants_to_json(&sc)),
                Format::Text => {
                    println!("dim: {}", sc.dim());
                    for (i, j, k, c) in sc.nonzero_entries() {
                        println!("c[{i}][{j}][{k}] = {c}");
                    }
                }
            }
        }
        Command::Verify { n_max } => {
            if n_max == 0 {
                return Err("n-max must be >= 1".into());
            }
            let reports = verify::run_all(n_max);
            let mut all_passed = true;
            for report in &reports {
                if report.passed() {
                    println!("{}: PASS ({} checks)", report.name, report.checks);
                } else {
                    all_passed = false;
                    println!(
                        "{}: FAIL ({}/{} checks failed)",
                        report.name,
                        report.failures.len(),
                        report.checks
                    );
                    for failure in &report.failures {
                        eprintln!("  {}: {}", report.name, failure);
                    }
                }
            }
            if !all_passed {
                return Err("verification failed".into());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // Die silently on closed pipes (`matlie basis ... | head`) instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
