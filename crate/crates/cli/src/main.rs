//! `torquo`: homology and classification of torus-action quotients of odd
//! spheres from the weight matrix.

mod render;

use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use torquo::action::{canonicalize, parse_action, CanonicalStep};
use torquo::checks::{verify, VerifyReport};
use torquo::classify::{classify, Classification};
use torquo::topology::{
    poincare_quotient, poincare_singular, singular_strata, singular_wedge, wedge_homology, QuotientSummary,
    ReducedHomology, Stratum, WedgeSummand,
};
use torquo::tutte::{tutte, tutte_oracle_with_limit, BivariatePolynomial, DEFAULT_ORACLE_LIMIT};
use torquo::{FlatLattice, IntMatrix, Matroid, RepresentedMatroid, TorusAction};

/// Deletion-contraction is not refused above this size, only announced.
const TUTTE_WARNING_SIZE: usize = 25;

#[derive(Parser)]
#[command(name = "torquo", version, about = "Quotients of odd spheres by linear torus actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Divide each row by the gcd of its entries before analysis.
    #[arg(long, global = true)]
    auto_reduce: bool,

    /// Run exhaustive enumerations even above --limit.
    #[arg(long, global = true)]
    force: bool,

    /// Largest ground set for subset enumeration and the lattice of flats.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORACLE_LIMIT, global = true)]
    limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Poincare polynomial, dimension and Betti numbers of the quotient.
    Analyze(Input),
    /// Tutte polynomial from deletion-contraction and from the subset expansion.
    Tutte(Input),
    /// Lattice of flats with Möbius values.
    Flats(Input),
    /// Strata, wedge decomposition and homology of the singular set.
    Singular(Input),
    /// Classify the quotient.
    Classify(Input),
    /// Row-reduced form of the matrix with the moves used.
    Canonicalize(Input),
    /// Check the identities relating the invariants on this input.
    Verify(Input),
}

#[derive(Args)]
struct Input {
    /// File with the matrix: one row per line, or {"rows": [[...], ...]}.
    #[arg(conflicts_with = "matrix")]
    path: Option<PathBuf>,

    /// Inline matrix, rows separated by newlines or ';'.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("action is not effective (kernel {kernel}){hint}")]
    NotEffective { kernel: String, hint: &'static str },
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::NotEffective { .. } => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<torquo::Error> for CliError {
    fn from(e: torquo::Error) -> Self {
        match e {
            torquo::Error::NotEffective(kernel) => CliError::NotEffective {
                kernel: kernel.to_string(),
                hint: "",
            },
            torquo::Error::Invariant(msg) => CliError::Invariant(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_matrix(input: &Input) -> CliResult<TorusAction> {
    let text = match (&input.path, &input.matrix) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(inline)) => inline.replace(';', "\n"),
        (None, None) => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    Ok(parse_action(&text)?)
}

/// Applies `--auto-reduce` and insists on an effective action.
fn effective(cli: &Cli, action: TorusAction) -> CliResult<TorusAction> {
    let action = if cli.auto_reduce {
        let (reduced, steps) = canonicalize_rows(&action);
        for (row, by) in steps {
            eprintln!("auto-reduce: divided row {} by {by}", row + 1);
        }
        reduced
    } else {
        action
    };
    let eff = action.effectiveness();
    if eff.effective {
        Ok(action)
    } else {
        Err(CliError::NotEffective {
            kernel: eff.kernel.to_string(),
            hint: if cli.auto_reduce {
                "; row division does not remove it"
            } else {
                "; try --auto-reduce"
            },
        })
    }
}

fn canonicalize_rows(action: &TorusAction) -> (TorusAction, Vec<(usize, String)>) {
    let reduced = action.reduce_noneffective();
    let steps = (0..action.torus_rank())
        .filter_map(|i| {
            let (a, b) = (action.matrix().row(i), reduced.matrix().row(i));
            (a != b).then(|| {
                let j = b.iter().position(|v| *v != 0.into()).expect("nonzero row");
                (i, (&a[j] / &b[j]).to_string())
            })
        })
        .collect();
    (reduced, steps)
}

fn guard(cli: &Cli, m: &RepresentedMatroid, what: &str) -> CliResult<()> {
    if m.size() > cli.limit && !cli.force {
        return Err(CliError::Input(format!(
            "{what} enumerates subsets of {} elements, above the limit of {}; pass --force to run anyway",
            m.size(),
            cli.limit
        )));
    }
    Ok(())
}

fn warn_large(m: &RepresentedMatroid) {
    if m.size() > TUTTE_WARNING_SIZE {
        eprintln!(
            "warning: deletion-contraction on {} elements may take a long time",
            m.size()
        );
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    matrix: IntMatrix,
    #[serde(flatten)]
    summary: QuotientSummary,
}

#[derive(Serialize)]
struct TutteReport {
    deletion_contraction: BivariatePolynomial,
    oracle: BivariatePolynomial,
    equal: bool,
}

#[derive(Serialize)]
struct SingularReport {
    poincare: ReducedHomology,
    strata: Vec<Stratum>,
    wedge: Vec<WedgeSummand>,
    wedge_consistent: bool,
}

#[derive(Serialize)]
struct CanonicalReport {
    matrix: IntMatrix,
    steps: Vec<CanonicalStep>,
}

enum Report {
    Analyze(AnalyzeReport),
    Tutte(TutteReport),
    Flats(FlatLattice),
    Singular(SingularReport),
    Classify(Classification),
    Canonicalize(CanonicalReport),
    Verify(VerifyReport),
}

fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Analyze(input) => {
            let action = effective(cli, read_matrix(input)?)?;
            let summary = poincare_quotient(&action)?;
            Ok(Report::Analyze(AnalyzeReport {
                matrix: action.into_matrix(),
                summary,
            }))
        }
        Command::Tutte(input) => {
            let m = RepresentedMatroid::from_action(&read_matrix(input)?)?;
            guard(cli, &m, "the subset expansion")?;
            warn_large(&m);
            let limit = if cli.force { usize::MAX } else { cli.limit };
            let deletion_contraction = tutte(&m);
            let oracle = tutte_oracle_with_limit(&m, limit)?;
            let equal = deletion_contraction == oracle;
            Ok(Report::Tutte(TutteReport {
                deletion_contraction,
                oracle,
                equal,
            }))
        }
        Command::Flats(input) => {
            let m = RepresentedMatroid::from_action(&read_matrix(input)?)?;
            guard(cli, &m, "the lattice of flats")?;
            Ok(Report::Flats(m.flat_lattice()))
        }
        Command::Singular(input) => {
            let action = effective(cli, read_matrix(input)?)?;
            let m = RepresentedMatroid::from_action(&action)?;
            guard(cli, &m, "the lattice of flats")?;
            warn_large(&m);
            let poincare = poincare_singular(&action)?;
            let wedge = singular_wedge(&action)?;
            let wedge_consistent = action.torus_rank() == 0 || wedge_homology(&wedge).as_ref() == Some(&poincare);
            if !wedge_consistent {
                return Err(CliError::Invariant(
                    "wedge decomposition disagrees with the singular-set polynomial".into(),
                ));
            }
            Ok(Report::Singular(SingularReport {
                poincare,
                strata: singular_strata(&action)?,
                wedge,
                wedge_consistent,
            }))
        }
        Command::Classify(input) => {
            let action = effective(cli, read_matrix(input)?)?;
            warn_large(&RepresentedMatroid::from_action(&action)?);
            Ok(Report::Classify(classify(&action)?))
        }
        Command::Canonicalize(input) => {
            let (action, steps) = canonicalize(&read_matrix(input)?);
            Ok(Report::Canonicalize(CanonicalReport {
                matrix: action.into_matrix(),
                steps,
            }))
        }
        Command::Verify(input) => {
            let action = read_matrix(input)?;
            let action = if cli.auto_reduce {
                effective(cli, action)?
            } else {
                action
            };
            let m = RepresentedMatroid::from_action(&action)?;
            guard(cli, &m, "verification")?;
            warn_large(&m);
            let limit = if cli.force { usize::MAX } else { cli.limit };
            Ok(Report::Verify(verify(&m, limit)))
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> String {
    match cli.format {
        Format::Json => {
            let json = match report {
                Report::Analyze(r) => serde_json::to_string_pretty(r),
                Report::Tutte(r) => serde_json::to_string_pretty(r),
                Report::Flats(r) => serde_json::to_string_pretty(r),
                Report::Singular(r) => serde_json::to_string_pretty(r),
                Report::Classify(r) => serde_json::to_string_pretty(r),
                Report::Canonicalize(r) => serde_json::to_string_pretty(r),
                Report::Verify(r) => serde_json::to_string_pretty(r),
            };
            json.expect("reports serialize") + "\n"
        }
        Format::Text => match report {
            Report::Analyze(r) => render::analyze(&r.summary),
            Report::Tutte(r) => render::tutte(&r.deletion_contraction, &r.oracle, r.equal),
            Report::Flats(r) => render::flats(r),
            Report::Singular(r) => render::singular(&r.poincare, &r.strata, &r.wedge),
            Report::Classify(r) => render::classification(r),
            Report::Canonicalize(r) => render::canonical(&r.matrix, &r.steps),
            Report::Verify(r) => render::verify(r),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are invalid input; exit code 2 is reserved.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", emit(&cli, &report));
            match report {
                Report::Verify(v) if !v.passed() => ExitCode::from(3),
                Report::Tutte(t) if !t.equal => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
