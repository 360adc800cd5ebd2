use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasispin::arith::Rational;
use quasispin::fock::dictionary_to_o5;
use quasispin::gt::check_highest;
use quasispin::lie::OrthogonalAlgebra;
use quasispin::report::{write_report, write_table, Format, GeneratorMap, ReportError, Status, VerificationReport};
use quasispin::suites::{
    classify_suite, fock_suite, identities_suite, probe_suite, repr_suite, IdentityOptions, ReprSource, SuiteError, DEFAULT_SEED,
};

#[derive(Parser, Debug)]
#[command(name = "quasispin", version, about = "Exact checks of Pfaffian identities in U(o_N) and the o_5 quasi-spin classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Write the report (or table) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Include the expensive cases.
    #[arg(long, global = true)]
    slow: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pfaffian identities in U(o_{2n+1}).
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Quasi-spin realization on the Fock space of one j-shell.
    Fock {
        #[command(subcommand)]
        what: FockCommand,
    },
    /// Decomposition and slice analysis of a source representation.
    Repr {
        #[command(subcommand)]
        what: ReprCommand,
    },
    /// Classification table of one irreducible o_5 representation.
    Classify {
        /// Highest weight `λ1,λ2` with 0 ≥ λ1 ≥ λ2, e.g. `0,-1` or `-1/2,-3/2`.
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        weight: (Rational, Rational),
        /// Also write the check report here (JSON or CSV by --format).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Convention probes.
    Probe {
        #[command(subcommand)]
        what: ProbeCommand,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    Identities {
        /// Rank of o_{2n+1}.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        n: u8,
    },
}

#[derive(Subcommand, Debug)]
enum FockCommand {
    Build {
        #[arg(long, value_parser = parse_j)]
        j: Rational,
        /// Export the generator matrices as JSON.
        #[arg(long)]
        generators: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SourceArg {
    Fock,
    DefiningPower,
}

#[derive(Subcommand, Debug)]
enum ReprCommand {
    Analyze {
        #[arg(long, value_enum)]
        source: SourceArg,
        /// Tensor power of the defining representation (default: 1, 2 and 3).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        power: Option<u32>,
        /// Fock shell (default: 1/2 and 3/2).
        #[arg(long, value_parser = parse_j)]
        j: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
enum ProbeCommand {
    Conventions,
}

fn parse_weight(s: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected λ1,λ2, got {:?}", s))?;
    let l1: Rational = a.trim().parse().map_err(|e| format!("{}", e))?;
    let l2: Rational = b.trim().parse().map_err(|e| format!("{}", e))?;
    check_highest(&l1, &l2).map_err(|e| e.to_string())?;
    Ok((l1, l2))
}

fn parse_j(s: &str) -> Result<Rational, String> {
    let j: Rational = s.parse().map_err(|e| format!("{}", e))?;
    if j == Rational::half() || j == Rational::frac(3, 2) {
        Ok(j)
    } else {
        Err(format!("j must be 1/2 or 3/2 (got {})", j))
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<SuiteError> for Failure {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Usage(m) => Failure::Usage(m),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn summarize(r: &VerificationReport) {
    eprintln!(
        "{}: {} pass, {} fail, {} anomaly ({} ms)",
        r.suite,
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Anomaly),
        r.wall_time_ms
    );
    for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
        eprintln!("  {} {}", c.status, c.id);
    }
}

fn emit(r: &VerificationReport, common: &Common) -> Result<bool, Failure> {
    let mut w = sink(common.out.as_deref())?;
    write_report(r, common.format.into(), &mut w)?;
    w.flush()?;
    summarize(r);
    Ok(r.passed())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let c = &cli.common;
    match cli.command {
        Command::Verify { what: VerifyCommand::Identities { n } } => {
            let opts = IdentityOptions { slow: c.slow, seed: c.seed, ..IdentityOptions::new(n as usize) };
            emit(&identities_suite(&opts)?, c)
        }
        Command::Fock { what: FockCommand::Build { j, generators } } => {
            if let Some(path) = generators {
                let r = dictionary_to_o5(&j).map_err(|e| Failure::Runtime(e.to_string()))?;
                let alg = OrthogonalAlgebra::new(5).map_err(|e| Failure::Runtime(e.to_string()))?;
                let map = GeneratorMap::new(format!("Fock({})", j), &alg, &r.generators);
                let mut w = sink(Some(&path))?;
                serde_json::to_writer_pretty(&mut w, &map).map_err(|e| Failure::Runtime(e.to_string()))?;
                w.flush()?;
            }
            emit(&fock_suite(&j)?, c)
        }
        Command::Repr { what: ReprCommand::Analyze { source, power, j } } => {
            let src = match source {
                SourceArg::Fock => {
                    if power.is_some() {
                        return Err(Failure::Usage("--power applies to --source defining-power".into()));
                    }
                    ReprSource::Fock(j.map_or_else(|| vec![Rational::half(), Rational::frac(3, 2)], |j| vec![j]))
                }
                SourceArg::DefiningPower => {
                    if j.is_some() {
                        return Err(Failure::Usage("--j applies to --source fock".into()));
                    }
                    ReprSource::DefiningPower(power.map_or_else(|| vec![1, 2, 3], |p| vec![p]))
                }
            };
            emit(&repr_suite(&src)?, c)
        }
        Command::Classify { weight: (l1, l2), report } => {
            let (classified, r) = classify_suite(&l1, &l2, c.slow)?;
            let mut w = sink(c.out.as_deref())?;
            write_table(&classified.table, c.format.into(), &mut w)?;
            w.flush()?;
            if let Some(path) = report {
                let mut w = sink(Some(&path))?;
                write_report(&r, c.format.into(), &mut w)?;
                w.flush()?;
            }
            summarize(&r);
            Ok(r.passed())
        }
        Command::Probe { what: ProbeCommand::Conventions } => emit(&probe_suite(c.slow)?, c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
    }
}
