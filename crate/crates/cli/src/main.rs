mod analyze;
mod cache;

use std::fs::{self, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use zs_core::verify::{self, checks, Mode, Target, VerifyParams};
use zs_core::{enumerate_mzs, ClassRecord, EnumSpec, Filter};

#[derive(Parser)]
#[command(
    name = "zs",
    version,
    about = "Minimal zero-sum sequences over cyclic groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants of a single sequence
    Analyze {
        #[arg(long)]
        n: u64,
        /// Sequence text, e.g. "1^3,5,7^2"
        #[arg(long)]
        seq: String,
        #[arg(long)]
        json: bool,
    },
    /// Stream minimal zero-sum classes as JSON lines
    Enumerate(EnumerateArgs),
    /// Run a verification campaign and append its report to the results directory
    Verify(VerifyArgs),
    /// Run the randomized property suite
    Props {
        #[arg(long, value_delimiter = ',', default_value = "7,11,13")]
        p_set: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, conflicts_with = "min_length")]
    length: Option<usize>,
    #[arg(long)]
    min_length: Option<usize>,
    /// Defaults to n
    #[arg(long, requires = "min_length")]
    max_length: Option<usize>,
    #[arg(long, default_value = "all")]
    filter: Filter,
    /// Also search sequences containing the zero element
    #[arg(long)]
    include_zero: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Node budget; output is marked incomplete when exhausted
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    target: String,
    #[arg(long, conflicts_with = "n_range")]
    n: Option<u32>,
    /// Inclusive range A..B
    #[arg(long)]
    n_range: Option<String>,
    #[arg(long, conflicts_with = "p_set")]
    p: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    p_set: Option<Vec<u32>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "assert")]
    mode: String,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value = "results")]
    results_dir: PathBuf,
}

/// Failures that are the caller's fault exit with 2.
struct Usage(anyhow::Error);

impl From<zs_core::Error> for Usage {
    fn from(e: zs_core::Error) -> Self {
        Usage(e.into())
    }
}

impl From<anyhow::Error> for Usage {
    fn from(e: anyhow::Error) -> Self {
        Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze { n, seq, json } => analyze::run(n, &seq, json),
        Command::Enumerate(args) => enumerate(args),
        Command::Verify(args) => run_verify(args),
        Command::Props { p_set, seed, jobs } => props(p_set, seed, jobs),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn enumerate(args: EnumerateArgs) -> Result<u8, Usage> {
    let mut spec = match (args.length, args.min_length) {
        (Some(len), _) => EnumSpec::new(args.n, len),
        (None, Some(min)) => {
            EnumSpec::lengths(args.n, min..=args.max_length.unwrap_or(args.n as usize))
        }
        (None, None) => {
            return Err(anyhow::anyhow!("one of --length or --min-length is required").into())
        }
    };
    spec = spec
        .filter(args.filter)
        .jobs(args.jobs)
        .node_budget(args.budget);
    spec.exclude_zero = !args.include_zero;
    spec.validate()?;

    let cached = cache::Cache::from_env().map(|c| (c.path_for(&spec), c));
    if let Some((path, _)) = &cached {
        if let Ok(bytes) = fs::read(path) {
            write_output(args.out.as_ref(), &bytes)?;
            return Ok(0);
        }
    }

    let result = enumerate_mzs(&spec)?;
    let mut bytes = Vec::new();
    for class in &result.classes {
        let record = ClassRecord::from_class(class)?;
        serde_json::to_writer(&mut bytes, &record).context("serializing record")?;
        bytes.push(b'\n');
    }
    write_output(args.out.as_ref(), &bytes)?;
    if !result.complete {
        eprintln!(
            "incomplete: budget exhausted after {} nodes; output is partial",
            result.nodes
        );
        return Ok(1);
    }
    if let Some((path, cache)) = cached {
        // a cache write failure only costs a recomputation later
        if let Err(e) = cache.store(&path, &bytes) {
            eprintln!("warning: cache write failed: {e:#}");
        }
    }
    Ok(0)
}

fn write_output(out: Option<&PathBuf>, bytes: &[u8]) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn parse_range(text: &str) -> anyhow::Result<(u32, u32)> {
    let Some((a, b)) = text.split_once("..") else {
        bail!("expected A..B, got {text:?}");
    };
    let a = a
        .trim()
        .parse()
        .with_context(|| format!("bad range start {a:?}"))?;
    let b = b
        .trim()
        .parse()
        .with_context(|| format!("bad range end {b:?}"))?;
    Ok((a, b))
}

fn run_verify(args: VerifyArgs) -> Result<u8, Usage> {
    let target: Target = args.target.parse()?;
    let mode: Mode = args.mode.parse()?;
    let params = VerifyParams {
        n: args.n,
        n_range: args.n_range.as_deref().map(parse_range).transpose()?,
        p: args.p,
        p_set: args.p_set,
        seed: args.seed,
        mode,
        budget: args.budget,
        jobs: args.jobs,
    };
    let report = verify::run(target, &params)?;
    let line = serde_json::to_string(&report).context("serializing report")?;

    fs::create_dir_all(&args.results_dir)
        .with_context(|| format!("creating {}", args.results_dir.display()))?;
    let path = args.results_dir.join("verify.jsonl");
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&path)
        .with_context(|| format!("opening {}", path.display()))?;
    writeln!(file, "{line}").with_context(|| format!("appending to {}", path.display()))?;

    println!("{line}");
    Ok(report.exit_code() as u8)
}

fn props(p_set: Vec<u32>, seed: u64, jobs: usize) -> Result<u8, Usage> {
    for &p in &p_set {
        if !zs_core::CyclicGroup::new(p as u64)?.is_prime()
            || !(5..=verify::EXHAUSTIVE_CAP).contains(&p)
        {
            return Err(anyhow::anyhow!(
                "--p-set entries must be primes in 5..={}",
                verify::EXHAUSTIVE_CAP
            )
            .into());
        }
    }
    let cfg = checks::SuiteConfig {
        primes: p_set,
        seed,
        jobs,
        ..checks::SuiteConfig::default()
    };
    let outcomes = checks::run_suite(&cfg)?;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut failed = false;
    for o in &outcomes {
        failed |= !o.passed();
        let line = json!({
            "check": o.check,
            "checked": o.checked,
            "passed": o.passed(),
            "violations": o.violations,
        });
        writeln!(out, "{line}").context("writing stdout")?;
    }
    out.flush().context("writing stdout")?;
    Ok(u8::from(failed))
}
