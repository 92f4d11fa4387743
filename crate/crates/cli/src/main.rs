//! `cobweb`: admissibility checks, F-nomial coefficients, primary
//! factorization and tree enumeration from the command line.
//!
//! Exit codes: 0 success or admissible, 1 a well-formed negative verdict,
//! 2 usage or input errors.

mod input;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cobweb::{
    binomial_triangle, count_paths, decompose, enumerate, f_binomial, is_admissible,
    path_to_sequence, run_suites, sample_random, EnumerationConfig, FSequence, Mutant, SuiteStatus,
    TreePath, VerifyConfig,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cobweb", version, about = "Cobweb-admissible sequence toolkit")]
struct Cli {
    /// Output format
    #[arg(
        long,
        global = true,
        value_enum,
        default_value = "text",
        env = "COBWEB_FORMAT"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether every F-nomial coefficient of a sequence file is an integer
    Check {
        /// Sequence file (`-` for stdin)
        file: PathBuf,
    },
    /// Evaluate one F-nomial coefficient C(n,k)_F exactly
    Binomial {
        file: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Print the F-nomial triangle up to a given row
    Triangle {
        file: PathBuf,
        /// Last row (defaults to the sequence length)
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Factor a sequence into per-prime exponent sequences
    Factor { file: PathBuf },
    /// List every admissible exponent path of a given depth with weights up to a cap
    Enumerate {
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        cap: u64,
        /// Print powers of this prime instead of exponents
        #[arg(long)]
        prime: Option<BigUint>,
        /// Print only the number of paths
        #[arg(long)]
        count_only: bool,
    },
    /// Draw one random admissible path
    Sample {
        #[arg(long)]
        depth: usize,
        /// Mean of the geometric offset above each minimal successor (decimal or a/b)
        #[arg(long, default_value = "1", value_parser = parse_mean)]
        mean: Mean,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        prime: Option<BigUint>,
    },
    /// Run the cross-check suites
    Verify {
        #[arg(long, default_value_t = 6)]
        max_depth: usize,
        #[arg(long, default_value_t = 2)]
        max_cap: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        mutant: Option<MutantArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MutantArg {
    SuccessorOffByOne,
}

#[derive(Debug, Clone)]
struct Mean {
    text: String,
    value: f64,
}

fn parse_mean(s: &str) -> Result<Mean, String> {
    let value = match s.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| "not a number")?;
            let b: f64 = b.trim().parse().map_err(|_| "not a number")?;
            a / b
        }
        None => s.trim().parse().map_err(|_| "not a number")?,
    };
    if !(value.is_finite() && value > 0.0) {
        return Err("mean must be positive".into());
    }
    Ok(Mean {
        text: s.trim().to_owned(),
        value,
    })
}

/// Failure carried up to `main`: either an input/usage error or a broken stdout.
enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<input::InputError> for Failure {
    fn from(e: input::InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<cobweb::Error> for Failure {
    fn from(e: cobweb::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Check { file } => check(&input::read_sequence(file)?, fmt, out),
        Command::Binomial { file, n, k } => {
            binomial(&input::read_sequence(file)?, *n, *k, fmt, out)
        }
        Command::Triangle { file, depth } => {
            triangle(&input::read_sequence(file)?, *depth, fmt, out)
        }
        Command::Factor { file } => factor(&input::read_sequence(file)?, fmt, out),
        Command::Enumerate {
            depth,
            cap,
            prime,
            count_only,
        } => {
            let mut config = EnumerationConfig::new(*depth, *cap);
            config.prime = prime.clone();
            enumerate_cmd(&config, *count_only, fmt, out)
        }
        Command::Sample {
            depth,
            mean,
            seed,
            prime,
        } => sample(*depth, mean, *seed, prime.as_ref(), fmt, out),
        Command::Verify {
            max_depth,
            max_cap,
            trials,
            seed,
            mutant,
        } => {
            let config = VerifyConfig {
                max_depth: *max_depth,
                max_cap: *max_cap,
                trials: *trials,
                seed: *seed,
                mutant: mutant.map(|MutantArg::SuccessorOffByOne| Mutant::SuccessorOffByOne),
            };
            verify(&config, fmt, out)
        }
    }
}

fn emit(out: &mut impl Write, command: &str, input: Value, mut fields: Value) -> io::Result<()> {
    let obj = fields.as_object_mut().expect("report fields are an object");
    obj.insert("command".into(), command.into());
    obj.insert("input".into(), input);
    obj.insert("version".into(), VERSION.into());
    writeln!(out, "{fields}")
}

fn check(seq: &FSequence, fmt: Format, out: &mut impl Write) -> Outcome {
    let report = is_admissible(seq);
    match fmt {
        Format::Text => match (&report.first_failure, &report.witness_value) {
            (Some((n, k)), Some(w)) => writeln!(out, "not admissible at (n={n},k={k}), value {w}")?,
            _ => writeln!(out, "admissible")?,
        },
        Format::Json => emit(
            out,
            "check",
            json!({ "length": seq.len() }),
            json!({
                "result": {
                    "admissible": report.admissible,
                    "checked_depth": report.checked_depth,
                },
                "first_failure": report.first_failure.map(|(n, k)| json!({ "n": n, "k": k })),
                "witness": report.witness_value.map(|w| w.to_string()),
            }),
        )?,
    }
    Ok(if report.admissible { 0 } else { 1 })
}

fn binomial(seq: &FSequence, n: usize, k: usize, fmt: Format, out: &mut impl Write) -> Outcome {
    let value = f_binomial(seq, n, k)?;
    match fmt {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => emit(
            out,
            "binomial",
            json!({ "length": seq.len(), "n": n, "k": k }),
            json!({ "result": value.to_string() }),
        )?,
    }
    Ok(0)
}

fn triangle(seq: &FSequence, depth: Option<usize>, fmt: Format, out: &mut impl Write) -> Outcome {
    let depth = depth.unwrap_or(seq.len());
    let rows = binomial_triangle(seq, depth)?;
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    match fmt {
        Format::Text => {
            for row in &rows {
                writeln!(out, "{}", row.join(" "))?;
            }
        }
        Format::Json => emit(
            out,
            "triangle",
            json!({ "length": seq.len(), "depth": depth }),
            json!({ "result": rows }),
        )?,
    }
    Ok(0)
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn factor(seq: &FSequence, fmt: Format, out: &mut impl Write) -> Outcome {
    let d = decompose(seq)?;
    match fmt {
        Format::Text if d.is_empty() => writeln!(out, "(empty decomposition)")?,
        Format::Text => {
            for c in d.components() {
                writeln!(out, "{}: [{}]", c.prime(), join(c.exponents()))?;
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, Value> = d
                .components()
                .map(|c| (c.prime().to_string(), json!(c.exponents())))
                .collect();
            emit(
                out,
                "factor",
                json!({ "length": seq.len() }),
                json!({ "result": map }),
            )?
        }
    }
    Ok(0)
}

fn render(path: &TreePath, prime: Option<&BigUint>) -> Result<Vec<String>, Failure> {
    Ok(match prime {
        Some(p) => path_to_sequence(path, p)?
            .terms()
            .iter()
            .map(ToString::to_string)
            .collect(),
        None => path.weights().iter().map(ToString::to_string).collect(),
    })
}

fn count_value(count: u128) -> Value {
    match u64::try_from(count) {
        Ok(c) => json!(c),
        Err(_) => json!(count.to_string()),
    }
}

fn enumerate_cmd(
    config: &EnumerationConfig,
    count_only: bool,
    fmt: Format,
    out: &mut impl Write,
) -> Outcome {
    let prime = config.prime.as_ref();
    if let Some(p) = prime {
        // validate up front so nothing is printed for a bad prime
        path_to_sequence(&TreePath::root(), p)?;
    }
    let input = json!({
        "depth": config.depth,
        "cap": config.exponent_cap,
        "prime": prime.map(ToString::to_string),
    });
    match (fmt, count_only) {
        (Format::Text, true) => writeln!(out, "{}", count_paths(config))?,
        (Format::Text, false) => {
            for path in enumerate(config) {
                writeln!(out, "{}", render(&path, prime)?.join(","))?;
            }
        }
        (Format::Json, true) => emit(
            out,
            "enumerate",
            input,
            json!({ "result": { "count": count_value(count_paths(config)) } }),
        )?,
        (Format::Json, false) => {
            let paths = enumerate(config)
                .map(|p| {
                    Ok(match prime {
                        Some(_) => json!(render(&p, prime)?),
                        None => json!(p.weights()),
                    })
                })
                .collect::<Result<Vec<Value>, Failure>>()?;
            let count = paths.len() as u128;
            emit(
                out,
                "enumerate",
                input,
                json!({ "result": { "count": count_value(count), "paths": paths } }),
            )?
        }
    }
    Ok(0)
}

fn sample(
    depth: usize,
    mean: &Mean,
    seed: u64,
    prime: Option<&BigUint>,
    fmt: Format,
    out: &mut impl Write,
) -> Outcome {
    let path = sample_random(depth, mean.value, seed)?;
    let rendered = render(&path, prime)?;
    match fmt {
        Format::Text => writeln!(out, "{}", rendered.join(","))?,
        Format::Json => emit(
            out,
            "sample",
            json!({
                "depth": depth,
                "mean": mean.text,
                "seed": seed,
                "prime": prime.map(ToString::to_string),
            }),
            json!({
                "result": {
                    "weights": path.weights(),
                    "sequence": prime.map(|_| rendered),
                }
            }),
        )?,
    }
    Ok(0)
}

fn verify(config: &VerifyConfig, fmt: Format, out: &mut impl Write) -> Outcome {
    let summary = run_suites(config);
    match fmt {
        Format::Text => writeln!(out, "{summary}")?,
        Format::Json => {
            let suites: Vec<Value> = summary
                .suites
                .iter()
                .map(|s| match &s.status {
                    SuiteStatus::Passed { cases } => {
                        json!({ "name": s.name, "status": "passed", "cases": cases })
                    }
                    SuiteStatus::Failed { counterexample } => json!({
                        "name": s.name,
                        "status": "failed",
                        "counterexample": counterexample,
                    }),
                    SuiteStatus::Skipped => json!({ "name": s.name, "status": "skipped" }),
                })
                .collect();
            emit(
                out,
                "verify",
                json!({
                    "max_depth": config.max_depth,
                    "max_cap": config.max_cap,
                    "trials": config.trials,
                    "seed": config.seed,
                }),
                json!({
                    "result": {
                        "passed": summary.passed(),
                        "failed": summary.failed(),
                        "skipped": summary.skipped(),
                        "suites": suites,
                    }
                }),
            )?
        }
    }
    Ok(if summary.all_passed() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_literals() {
        assert_eq!(parse_mean("1.5").unwrap().value, 1.5);
        assert_eq!(parse_mean("3/2").unwrap().value, 1.5);
        assert!(parse_mean("0").is_err());
        assert!(parse_mean("-1").is_err());
        assert!(parse_mean("1/0").is_err());
        assert!(parse_mean("abc").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
