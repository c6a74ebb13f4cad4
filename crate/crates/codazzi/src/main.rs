//! Command-line front end. Reports go to stdout as JSON, diagnostics to
//! stderr. Exit status: 0 pass, 1 failed verification, 2 malformed input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use codazzi::error::Error;
use codazzi::io::{self, AnyAlgebra};
use codazzi::report::{self, Report, Tolerances};
use codazzi::scalar::Rat;
use codazzi::{probe, tol};

#[derive(Parser)]
#[command(name = "codazzi", version, about = "Left-invariant metric geometry checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct TolArgs {
    /// Codazzi defect tolerance.
    #[arg(long, default_value_t = tol::DEFECT)]
    tol_defect: f64,
    /// Parallelism tolerance for ∇Ric.
    #[arg(long, default_value_t = tol::PARALLEL)]
    tol_parallel: f64,
    /// Divergence-norm tolerance.
    #[arg(long, default_value_t = tol::DIVERGENCE)]
    tol_divergence: f64,
    /// Structure-condition residual tolerance.
    #[arg(long, default_value_t = tol::STRUCTURE)]
    tol_structure: f64,
    /// Relative eigenvalue clustering tolerance.
    #[arg(long, default_value_t = tol::EIG_CLUSTER_REL)]
    tol_eig: f64,
}

impl TolArgs {
    fn to_tolerances(&self) -> Tolerances {
        Tolerances {
            defect: self.tol_defect,
            parallel: self.tol_parallel,
            divergence: self.tol_divergence,
            structure: self.tol_structure,
            eig_cluster_rel: self.tol_eig,
            jacobi: tol::JACOBI,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi, Codazzi-defect, ∇-norm, divergence and structure checks.
    Check {
        algebra: PathBuf,
        #[arg(long)]
        metric: Option<PathBuf>,
        /// Candidate self-adjoint operator; defaults to the Ricci operator.
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Eigenvalues and eigenspaces of the Ricci operator (or a tensor).
    Decompose {
        algebra: PathBuf,
        #[arg(long)]
        metric: Option<PathBuf>,
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long, default_value_t = tol::EIG_CLUSTER_REL)]
        tol_eig: f64,
    },
    /// Rebuild a built-in construction and certify it in exact arithmetic.
    Reproduce {
        /// Only `paper-example` is available: the 6-dimensional essential
        /// Codazzi tensor.
        target: String,
        /// Four pairwise distinct rationals, e.g. `0,1,3,7` or `1/2,1,3,7`.
        #[arg(long)]
        lambda: String,
        /// Nonzero rational weight.
        #[arg(long)]
        mu: String,
    },
    /// Minimize the Codazzi defect over left-invariant metrics.
    Probe {
        algebra: PathBuf,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "max-iter", default_value_t = 200)]
        max_iter: usize,
        #[arg(long, default_value_t = tol::DEFECT)]
        tol_defect: f64,
        #[arg(long, default_value_t = tol::PARALLEL)]
        tol_parallel: f64,
        #[arg(long, default_value_t = 0.25)]
        step_init: f64,
        #[arg(long, default_value_t = 1.0)]
        param_box: f64,
    },
    /// List or build the named fixtures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Build {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "rational")]
        field: String,
    },
}

fn parse_rational(text: &str) -> Result<Rat, Error> {
    Rat::from_str(text.trim())
        .map_err(|e| Error::InvalidInput(format!("bad rational `{text}`: {e}")))
}

fn command_echo() -> Vec<String> {
    std::env::args().collect()
}

fn emit<T: serde::Serialize>(report: &Report<T>) -> ExitCode {
    println!("{}", report.to_json());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            algebra,
            metric,
            tensor,
            tols,
        } => {
            let (alg, digest) = io::load_algebra(&algebra)?;
            let tolerances = tols.to_tolerances();
            let (results, pass) = match alg {
                AnyAlgebra::Rational(a) => {
                    let dim = a.dim();
                    let gram = metric.map(|p| io::load_metric::<Rat>(&p, dim)).transpose()?;
                    let t = tensor.map(|p| io::load_operator::<Rat>(&p, dim)).transpose()?;
                    report::run_check(a, gram, t, &tolerances)?
                }
                AnyAlgebra::Float(a) => {
                    let dim = a.dim();
                    let gram = metric.map(|p| io::load_metric::<f64>(&p, dim)).transpose()?;
                    let t = tensor.map(|p| io::load_operator::<f64>(&p, dim)).transpose()?;
                    report::run_check(a, gram, t, &tolerances)?
                }
            };
            Ok(emit(&Report {
                command: command_echo(),
                input_digest: Some(digest),
                tolerances,
                pass,
                results,
            }))
        }
        Command::Decompose {
            algebra,
            metric,
            tensor,
            tol_eig,
        } => {
            let (alg, digest) = io::load_algebra(&algebra)?;
            let (results, pass) = match alg {
                AnyAlgebra::Rational(a) => {
                    let dim = a.dim();
                    let gram = metric.map(|p| io::load_metric::<Rat>(&p, dim)).transpose()?;
                    let t = tensor.map(|p| io::load_operator::<Rat>(&p, dim)).transpose()?;
                    report::run_decompose(a, gram, t, tol_eig)?
                }
                AnyAlgebra::Float(a) => {
                    let dim = a.dim();
                    let gram = metric.map(|p| io::load_metric::<f64>(&p, dim)).transpose()?;
                    let t = tensor.map(|p| io::load_operator::<f64>(&p, dim)).transpose()?;
                    report::run_decompose(a, gram, t, tol_eig)?
                }
            };
            Ok(emit(&Report {
                command: command_echo(),
                input_digest: Some(digest),
                tolerances: Tolerances {
                    eig_cluster_rel: tol_eig,
                    ..Default::default()
                },
                pass,
                results,
            }))
        }
        Command::Reproduce { target, lambda, mu } => {
            if target != "paper-example" {
                return Err(Error::InvalidInput(format!(
                    "unknown reproduce target `{target}` (try `paper-example`)"
                )));
            }
            let parts: Vec<&str> = lambda.split(',').collect();
            if parts.len() != 4 {
                return Err(Error::InvalidInput(
                    "--lambda needs four comma-separated rationals".into(),
                ));
            }
            let lam = [
                parse_rational(parts[0])?,
                parse_rational(parts[1])?,
                parse_rational(parts[2])?,
                parse_rational(parts[3])?,
            ];
            let mu = parse_rational(&mu)?;
            let digest = io::digest(format!("lambda={lambda};mu={mu}").as_bytes());
            let (results, pass) = report::run_reproduce(lam, mu)?;
            Ok(emit(&Report {
                command: command_echo(),
                input_digest: Some(digest),
                tolerances: Tolerances::default(),
                pass,
                results,
            }))
        }
        Command::Probe {
            algebra,
            restarts,
            seed,
            max_iter,
            tol_defect,
            tol_parallel,
            step_init,
            param_box,
        } => {
            let (alg, digest) = io::load_algebra(&algebra)?;
            let config = probe::ProbeConfig {
                seed,
                restarts,
                max_iters: max_iter,
                tol_defect,
                tol_parallel,
                step_init,
                param_bounds: param_box,
                fd_step: 1e-6,
            };
            let (results, pass) = report::run_probe(&alg.to_float(), &config)?;
            Ok(emit(&Report {
                command: command_echo(),
                input_digest: Some(digest),
                tolerances: Tolerances {
                    defect: tol_defect,
                    parallel: tol_parallel,
                    ..Default::default()
                },
                pass,
                results,
            }))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let results = report::run_catalog_list();
                Ok(emit(&Report {
                    command: command_echo(),
                    input_digest: None,
                    tolerances: Tolerances::default(),
                    pass: true,
                    results,
                }))
            }
            CatalogAction::Build {
                name,
                n,
                out,
                field,
            } => {
                let file = report::run_catalog_build(&name, n, &field)?;
                let json = serde_json::to_string_pretty(&file).expect("serializable");
                match out {
                    Some(path) => {
                        std::fs::write(&path, json.as_bytes())?;
                        eprintln!("wrote {}", path.display());
                    }
                    None => println!("{json}"),
                }
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
