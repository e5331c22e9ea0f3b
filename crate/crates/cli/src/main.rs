//! `sylvester`: exact determinants, minors, identity verification and the
//! induction replay over JSON.
//!
//! Exit codes: 0 ok, 1 identity violation (or internal invariant failure),
//! 2 usage or input error, 3 method-specific failure.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sylvester::matrix::generic_matrix;
use sylvester::verify::{index_tuples, random_numeric_campaign, replay_induction_step, Campaign, SylvesterChecker};
use sylvester::{bareiss_det, det, dodgson_condensation, Error, IndexTuple, IntMatrix, MinorSpec};

/// Largest symbolic dimension accepted, and the one that needs `--allow-large`.
const MAX_SYMBOLIC_N: usize = 5;
/// Random campaigns memoize every minor of each sample; beyond this the
/// table no longer fits comfortably in memory.
const MAX_RANDOM_N: usize = 10;
/// Laplace expansion memoizes over column subsets (2^n entries).
const MAX_EXPANSION_N: usize = 20;

#[derive(Parser)]
#[command(name = "sylvester", version, about = "Exact determinants and Sylvester's determinant identity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact determinant of a JSON matrix.
    Det {
        /// Matrix file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Expansion)]
        method: Method,
        /// Include the elimination trace (bareiss only).
        #[arg(long)]
        trace: bool,
        /// Include wall-clock time in the output.
        #[arg(long)]
        timing: bool,
    },
    /// Delete one or two rows and columns and report the minor.
    Minor {
        input: PathBuf,
        /// Rows to delete, 1-based, comma separated.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..=2)]
        rows: Vec<usize>,
        /// Columns to delete, 1-based, comma separated.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..=2)]
        cols: Vec<usize>,
    },
    /// Check the identity symbolically or on seeded random matrices.
    #[command(group(ArgGroup::new("mode").required(true).args(["symbolic", "random"])))]
    Verify {
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        random: bool,
        #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
        n: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        /// A single tuple `i,j,k,l` instead of every sorted tuple.
        #[arg(long, value_delimiter = ',')]
        indices: Option<Vec<usize>>,
        #[arg(long, conflicts_with = "symbolic")]
        trials: Option<usize>,
        #[arg(long, conflicts_with = "symbolic")]
        seed: Option<u64>,
        #[arg(long, conflicts_with = "symbolic")]
        bound: Option<u64>,
        /// Permit symbolic n = 5.
        #[arg(long, conflicts_with = "random")]
        allow_large: bool,
        /// Render both sides of each symbolic report.
        #[arg(long, conflicts_with = "random")]
        show_polys: bool,
    },
    /// Replay the inductive step for an n×n base matrix, 1 ≤ n ≤ 4.
    Replay {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Expansion,
    Bareiss,
    Dodgson,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Expansion => "expansion",
            Method::Bareiss => "bareiss",
            Method::Dodgson => "dodgson",
        }
    }
}

enum Failure {
    Usage(String),
    Method(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// JSON document for stdout plus whether every checked claim held.
struct Outcome {
    document: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.document);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: identity violation found");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Method(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Det { input, method, trace, timing } => cmd_det(&read_matrix(&input)?, method, trace, timing),
        Command::Minor { input, rows, cols } => cmd_minor(&read_matrix(&input)?, &rows, &cols),
        Command::Verify { symbolic, n, n_min, n_max, indices, trials, seed, bound, allow_large, show_polys, .. } => {
            let indices = match indices.as_deref() {
                None => None,
                Some(&[i, j, k, l]) => Some(IndexTuple::new(i, j, k, l)),
                Some(_) => return Err(Failure::Usage("--indices takes exactly four values i,j,k,l".into())),
            };
            if symbolic {
                let dims = dimension_range(n, n_min, n_max, (3, 3))?;
                cmd_verify_symbolic(dims, indices, allow_large, show_polys)
            } else {
                let dims = dimension_range(n, n_min, n_max, (3, 6))?;
                let campaign = Campaign {
                    dims,
                    trials: trials.unwrap_or(100),
                    seed: seed.unwrap_or(42),
                    entry_bound: bound.unwrap_or(9),
                    indices,
                };
                cmd_verify_random(campaign)
            }
        }
        Command::Replay { n } => cmd_replay(n),
    }
}

fn read_matrix(path: &PathBuf) -> Result<IntMatrix, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?
    };
    Ok(IntMatrix::from_json(&text)?)
}

fn dimension_range(
    n: Option<usize>,
    n_min: Option<usize>,
    n_max: Option<usize>,
    default: (usize, usize),
) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let (lo, hi) = match n {
        Some(n) => (n, n),
        None => {
            let lo = n_min.unwrap_or_else(|| n_max.map_or(default.0, |hi| hi.min(default.0)));
            (lo, n_max.unwrap_or_else(|| lo.max(default.1)))
        }
    };
    if lo > hi {
        return Err(Failure::Usage(format!("--n-min {lo} exceeds --n-max {hi}")));
    }
    if lo < 2 {
        return Err(Failure::Usage(format!("n = {lo} is too small; the identity needs n >= 2")));
    }
    Ok(lo..=hi)
}

fn cmd_det(m: &IntMatrix, method: Method, trace: bool, timing: bool) -> Result<Outcome, Failure> {
    if trace && !matches!(method, Method::Bareiss) {
        return Err(Failure::Usage("--trace is only available with --method bareiss".into()));
    }
    if matches!(method, Method::Expansion) && m.n_rows() > MAX_EXPANSION_N {
        return Err(Failure::Usage(format!(
            "expansion supports n <= {MAX_EXPANSION_N}; use `--method bareiss` for larger matrices"
        )));
    }
    let started = Instant::now();
    let mut document = Map::new();
    let value: BigInt = match method {
        Method::Expansion => det(m)?,
        Method::Bareiss => {
            let (d, t) = bareiss_det(m)?;
            if trace {
                document.insert("trace".into(), serde_json::to_value(&t).expect("trace serializes"));
            }
            d
        }
        Method::Dodgson => match dodgson_condensation(m) {
            Ok(d) => d,
            Err(e @ Error::ZeroInteriorMinor { .. }) => {
                return Err(Failure::Method(format!("{e}; retry with `--method bareiss`")));
            }
            Err(e) => return Err(e.into()),
        },
    };
    let elapsed = started.elapsed();
    let mut out = Map::new();
    out.insert("det".into(), Value::String(value.to_string()));
    out.insert("method".into(), Value::String(method.name().into()));
    out.append(&mut document);
    if timing {
        out.insert("timing_ms".into(), json!(elapsed.as_secs_f64() * 1e3));
    }
    Ok(Outcome { document: Value::Object(out), ok: true })
}

fn cmd_minor(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> Result<Outcome, Failure> {
    let spec = match (rows, cols) {
        ([i], [k]) => MinorSpec::single(*i, *k)?,
        ([i, j], [k, l]) => MinorSpec::double(*i, *j, *k, *l)?,
        _ => return Err(Failure::Usage("--rows and --cols must name the same number of indices".into())),
    };
    let minor = m.minor(&spec)?;
    let value = det(&minor)?;
    let document = json!({
        "deleted_rows": spec.rows(),
        "deleted_cols": spec.cols(),
        "minor": serde_json::to_value(&minor).expect("matrix serializes"),
        "det": value.to_string(),
    });
    Ok(Outcome { document, ok: true })
}

fn cmd_verify_symbolic(
    dims: std::ops::RangeInclusive<usize>,
    indices: Option<IndexTuple>,
    allow_large: bool,
    show_polys: bool,
) -> Result<Outcome, Failure> {
    let hi = *dims.end();
    if hi > MAX_SYMBOLIC_N {
        return Err(Failure::Usage(format!("symbolic mode supports n <= {MAX_SYMBOLIC_N}")));
    }
    if hi == MAX_SYMBOLIC_N && !allow_large {
        return Err(Failure::Usage(format!("symbolic n = {MAX_SYMBOLIC_N} requires --allow-large")));
    }
    let mut reports = Vec::new();
    let mut violations = 0;
    for n in dims.clone() {
        let g = generic_matrix(n)?;
        let mut checker = SylvesterChecker::new(&g)?;
        let tuples = match indices {
            Some(t) => vec![t],
            None => index_tuples(n),
        };
        for t in tuples {
            let report = checker.check(t)?;
            if !report.holds {
                violations += 1;
            }
            reports.push(report.to_json(show_polys));
        }
    }
    let document = json!({
        "mode": "symbolic",
        "n_min": dims.start(),
        "n_max": dims.end(),
        "checks": reports.len(),
        "violations": violations,
        "all_hold": violations == 0,
        "reports": reports,
    });
    Ok(Outcome { document, ok: violations == 0 })
}

fn cmd_verify_random(campaign: Campaign) -> Result<Outcome, Failure> {
    if campaign.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    if *campaign.dims.end() > MAX_RANDOM_N {
        return Err(Failure::Usage(format!("random mode supports n <= {MAX_RANDOM_N}")));
    }
    let summary = random_numeric_campaign(&campaign)?;
    let document = json!({
        "mode": "random",
        "n_min": campaign.dims.start(),
        "n_max": campaign.dims.end(),
        "trials": campaign.trials,
        "seed": campaign.seed,
        "bound": campaign.entry_bound,
        "indices": campaign.indices.map(|t| t.as_array()),
        "trials_run": summary.trials_run,
        "checks": summary.checks,
        "violations": summary.violations,
        "all_hold": summary.violations == 0,
        "per_dimension": summary.per_dimension,
    });
    Ok(Outcome { document, ok: summary.violations == 0 })
}

fn cmd_replay(n: usize) -> Result<Outcome, Failure> {
    let report = replay_induction_step(n)?;
    Ok(Outcome { document: report.to_json(), ok: report.all_vanish() })
}
