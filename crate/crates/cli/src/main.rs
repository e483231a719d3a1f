//! Counts, sequences, generating functions and the verification suites for
//! permutations avoiding generalized patterns under begin/end constraints.
//!
//! Usage: vincular [--cache FILE] <count|seq|series|verify> [FLAGS]
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 on
//! usage errors or when the request cannot be served.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vincular::series::{egf_formula, ogf_formula, EgfFamily, OgfFamily, EGF_DEFAULT_ORDER, OGF_DEFAULT_ORDER};
use vincular::verify::{run_suite, Suite, VerifyConfig};
use vincular::{ConstraintSpec, Dispatcher, Engine, GeneralizedPattern, Oracle, Permutation, SequenceRecord};

#[derive(Parser)]
#[command(
    name = "vincular",
    version,
    about = "Generalized pattern avoidance with begin/end constraints"
)]
struct Cli {
    /// Persist oracle counts in this file.
    #[arg(long, global = true, value_name = "FILE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single count.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        /// Defaults to the cheapest engine covering the spec.
        #[arg(long)]
        engine: Option<Engine>,
    },
    /// Print counts for n = 0..=n-max, one column per engine.
    Seq {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = SeqFormat::Tsv)]
        format: SeqFormat,
        /// Repeat to compare engines side by side.
        #[arg(long)]
        engine: Vec<Engine>,
    },
    /// Print the coefficients of a registered generating function.
    Series {
        /// OGF family such as `1-3-2/inc` or `2-1-3/dec/inc`.
        #[arg(long, conflicts_with = "egf", required_unless_present = "egf")]
        ogf: Option<OgfFamily>,
        /// EGF family such as `1-32/inc/dec`.
        #[arg(long)]
        egf: Option<EgfFamily>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Number of coefficients; defaults per flavor.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check identities against the oracle.
    Verify {
        #[arg(long, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        kl_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// Comma-separated patterns, dashes marking non-adjacent letters.
    #[arg(long)]
    avoid: Option<String>,
    /// Pattern the prefix must realize.
    #[arg(long)]
    begin: Option<Permutation>,
    /// Pattern the suffix must realize.
    #[arg(long)]
    end: Option<Permutation>,
    /// `PATTERN:R` to require exactly R occurrences.
    #[arg(long, value_name = "PATTERN:R")]
    exactly: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

type Failure = Box<dyn std::error::Error>;

impl SpecArgs {
    fn build(&self) -> Result<ConstraintSpec, Failure> {
        let mut spec = match &self.avoid {
            Some(list) => ConstraintSpec::avoiding_str(list)?,
            None => ConstraintSpec::new(),
        };
        if let Some(q) = &self.begin {
            spec = spec.with_begin(q.clone())?;
        }
        if let Some(r) = &self.end {
            spec = spec.with_end(r.clone())?;
        }
        if let Some(arg) = &self.exactly {
            let (p, r) = arg
                .rsplit_once(':')
                .ok_or_else(|| format!("--exactly expects PATTERN:R, got {arg:?}"))?;
            let p: GeneralizedPattern = p.parse()?;
            let r: u64 = r
                .parse()
                .map_err(|_| format!("--exactly count {r:?} is not a number"))?;
            spec = spec.with_exactly(p, r)?;
        }
        Ok(spec)
    }
}

fn resolve_engines(
    d: &Dispatcher,
    spec: &ConstraintSpec,
    n_max: usize,
    requested: Vec<Engine>,
) -> Result<Vec<Engine>, Failure> {
    if requested.is_empty() {
        Ok(vec![d.cheapest(spec, n_max)?])
    } else {
        Ok(requested)
    }
}

fn write_tsv(out: &mut impl Write, n_max: usize, engines: &[Engine], recs: &[SequenceRecord]) -> io::Result<()> {
    write!(out, "n")?;
    for e in engines {
        write!(out, "\t{e}")?;
    }
    writeln!(out)?;
    for n in 0..=n_max {
        write!(out, "{n}")?;
        for r in recs {
            write!(out, "\t{}", r.values[n])?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let mut oracle = Oracle::new();
    if let Some(path) = &cli.cache {
        oracle = oracle.with_cache_file(path);
    }
    let d = Dispatcher::new(oracle);
    let mut out = io::stdout().lock();

    match cli.command {
        Command::Count { spec, n, engine } => {
            let spec = spec.build()?;
            let engine = match engine {
                Some(e) => e,
                None => d.cheapest(&spec, n)?,
            };
            writeln!(out, "{}", d.count(engine, &spec, n)?)?;
        }
        Command::Seq {
            spec,
            n_max,
            format,
            engine,
        } => {
            let spec = spec.build()?;
            let engines = resolve_engines(&d, &spec, n_max, engine)?;
            let recs = engines
                .iter()
                .map(|e| d.sequence(*e, &spec, n_max))
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                SeqFormat::Tsv => write_tsv(&mut out, n_max, &engines, &recs)?,
                SeqFormat::Json if recs.len() == 1 => writeln!(out, "{}", serde_json::to_string_pretty(&recs[0])?)?,
                SeqFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&recs)?)?,
            }
        }
        Command::Series { ogf, egf, k, l, order } => match (ogf, egf) {
            (Some(f), _) => write!(out, "{}", ogf_formula(&f, k, l, order.unwrap_or(OGF_DEFAULT_ORDER))?)?,
            (None, Some(f)) => write!(out, "{}", egf_formula(&f, k, l, order.unwrap_or(EGF_DEFAULT_ORDER))?)?,
            (None, None) => return Err("one of --ogf or --egf is required".into()),
        },
        Command::Verify {
            suite,
            n_max,
            kl_max,
            format,
        } => {
            let report = run_suite(suite, &d, &VerifyConfig { n_max, kl_max })?;
            match format {
                ReportFormat::Text => write!(out, "{report}")?,
                ReportFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        // A closed downstream pipe (`| head`) is not an error.
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
