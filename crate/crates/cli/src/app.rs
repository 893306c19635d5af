use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use parakit_core::graphlab::Graph;
use parakit_core::kernel::Truncation;

use crate::budget::{self, Family};
use crate::config::{CapsSpec, Format, RunConfig};
use crate::corpus;
use crate::output;
use crate::suites::{self, Fixture, Suite};

/// Exit code when every check passes (inconclusive included).
pub const EXIT_PASS: i32 = 0;
/// Exit code when some check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage and I/O errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "parakit", version, about = "Verification suites for promise-problem parameterized complexity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write every graph up to isomorphism with MIN_N..=MAX_N vertices as graph6 lines.
    Corpus {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite and print its reports.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        run: RunArgs,
        /// Replace part of the suite with a deliberately broken object.
        #[arg(long, value_enum)]
        inject: Option<Fixture>,
    },
    /// Tabulate measured costs against the fitted budget of a family.
    Budget {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Corpus file from `parakit corpus`; generated in memory when omitted.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// `n=N,param=P,index=K`. PARAKIT_CAPS, when set, takes precedence.
    #[arg(long)]
    pub caps: Option<CapsSpec>,
    #[arg(long, default_value_t = 1)]
    pub slack: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report file; standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Record wall-clock milliseconds in reports.
    #[arg(long)]
    pub timing: bool,
}

impl RunArgs {
    pub fn config(&self, env_caps: Option<&str>) -> anyhow::Result<RunConfig> {
        let caps = match env_caps.filter(|s| !s.trim().is_empty()) {
            Some(s) => s.parse().context("in PARAKIT_CAPS")?,
            None => self.caps.unwrap_or_default(),
        };
        let cfg = RunConfig {
            caps,
            slack: self.slack,
            corpus: self.corpus.clone(),
            format: self.format,
            seed: self.seed,
            timing: self.timing,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `args`, runs the command and returns the exit code. Diagnostics go
/// to `err`; reports go to the output file or `out`.
pub fn main_with(args: impl IntoIterator<Item = OsString>, env_caps: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match run(cli, env_caps, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: Cli, env_caps: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Corpus { max_n, min_n, output } => {
            let graphs = corpus::generate_range(min_n, max_n)?;
            if graphs.is_empty() {
                writeln!(err, "warning: corpus is empty (orders {min_n}..={max_n})")?;
            }
            with_output(output.as_deref(), out, |w| corpus::write(&graphs, w))?;
            for (n, count) in corpus::order_counts(&graphs) {
                writeln!(err, "order {n}: {count} graphs")?;
            }
            writeln!(err, "{} graphs", graphs.len())?;
            Ok(EXIT_PASS)
        }
        Command::Verify { suite, run, inject } => {
            let cfg = run.config(env_caps)?;
            let graphs = load(&cfg, suite.ceiling(), err)?;
            let reports = suites::run(suite, &graphs, &cfg, inject);
            with_output(run.output.as_deref(), out, |w| output::write_reports(&reports, cfg.format, w))?;
            write!(err, "{}", output::summary(&reports))?;
            Ok(if reports.iter().any(|r| r.failed()) { EXIT_FAIL } else { EXIT_PASS })
        }
        Command::Budget { family, run } => {
            let cfg = run.config(env_caps)?;
            let graphs = load(&cfg, cfg.caps.n, err)?;
            let rows = budget::table(family, &graphs, &cfg);
            if rows.is_empty() {
                writeln!(err, "warning: empty corpus, empty table")?;
            }
            with_output(run.output.as_deref(), out, |w| output::write_budget(&rows, cfg.format, w))?;
            Ok(if rows.iter().all(|r| r.pass) { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

/// The corpus file if one was given, otherwise every graph up to
/// `min(caps.n, ceiling)`.
fn load(cfg: &RunConfig, ceiling: usize, err: &mut dyn Write) -> anyhow::Result<Truncation<Graph>> {
    let graphs = match &cfg.corpus {
        Some(path) => {
            let loaded = corpus::read(path)?;
            if loaded.duplicates > 0 {
                writeln!(err, "warning: dropped {} isomorphic duplicates from {}", loaded.duplicates, path.display())?;
            }
            loaded.graphs
        }
        None => corpus::generate(cfg.caps.n.min(ceiling))?,
    };
    if graphs.is_empty() {
        writeln!(err, "warning: corpus is empty")?;
    }
    Ok(graphs)
}

fn with_output(
    path: Option<&Path>,
    out: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> anyhow::Result<()>,
) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            let file = File::create(p).with_context(|| format!("cannot write {}", p.display()))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => body(out),
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let env_caps = std::env::var("PARAKIT_CAPS").ok();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr());
    main_with(std::env::args_os(), env_caps.as_deref(), &mut out, &mut err)
}
