//! The `matroid-census` command line.
//!
//! Every subcommand writes its result to standard output (or `--out`) and
//! diagnostics to standard error. [`run`] never exits the process, so tests
//! can drive it directly.

mod commands;
mod render;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::{EnumConfig, Iso};
use crate::error::Error;

pub use render::{Format, Rows};

/// Exit status of a successful command.
pub const EXIT_OK: i32 = 0;
/// A table, formula or inequality check failed.
pub const EXIT_VALIDATION: i32 = 1;
/// The node budget ran out.
pub const EXIT_BUDGET: i32 = 2;
/// Malformed matroid text or bad command-line usage.
pub const EXIT_SYNTAX: i32 = 64;
pub const EXIT_DUPLICATE_BASIS: i32 = 65;
pub const EXIT_POPCOUNT: i32 = 66;
pub const EXIT_EXCHANGE: i32 = 67;
pub const EXIT_INTERNAL: i32 = 70;
pub const EXIT_IO: i32 = 74;

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::InvalidArgument(_) | Error::InputTooLarge { .. } => EXIT_SYNTAX,
        Error::DuplicateBasis(_) => EXIT_DUPLICATE_BASIS,
        Error::WrongPopcount { .. } => EXIT_POPCOUNT,
        Error::ExchangeFailure(_) => EXIT_EXCHANGE,
        Error::NotAMatroid(_) | Error::FlatAxiom { .. } => EXIT_VALIDATION,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Io(_) => EXIT_IO,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

/// An inclusive range of ground-set sizes: `5`, `2..8` or `2..=8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn range(self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a size"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IsoArg {
    Labeled,
    Nonisomorphic,
}

impl From<IsoArg> for Iso {
    fn from(a: IsoArg) -> Iso {
        match a {
            IsoArg::Labeled => Iso::Labeled,
            IsoArg::Nonisomorphic => Iso::Nonisomorphic,
        }
    }
}

/// What `formulas` verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Low-rank closed forms against counts.
    Thm1,
    /// Rank `n - 1` and `n - 2` simple closed forms against counts.
    Lemma2,
    /// Both closed-form families.
    Closed,
    /// Log-convexity thresholds.
    Logconvex,
    /// Increasing rank prefixes.
    Prefix,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Count tables for every n up to --max-n, checked against the published values.
    Tables,
    /// Closed forms, log-convexity thresholds and prefix chains.
    Formulas,
    /// `r,u_size,lower_bound` rows of the XOR-family paving bound for one n.
    PavingBound,
    /// Points-lines-planes inequality over simple rank-4 matroids.
    Plp,
    /// Free-erection dominance over simple rank-3 matroids.
    Dominance,
    /// One seeded random matroid from the level-by-level construction.
    RandomMatroid,
    /// Free erection of a matroid read from a file or standard input.
    FreeErect { path: Option<PathBuf> },
    /// All erections of a matroid read from a file or standard input.
    Erections { path: Option<PathBuf> },
}

/// Flags shared by all subcommands. Any flag may also come from `--config`.
#[derive(Clone, Debug, PartialEq, Eq, Args)]
pub struct Options {
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// A size or an inclusive range such as `2..8`.
    #[arg(long, global = true)]
    pub n: Option<NRange>,
    #[arg(long, global = true)]
    pub r: Option<usize>,
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub iso: Option<IsoArg>,
    /// Permit the full eight-element enumeration.
    #[arg(long, global = true)]
    pub long_run: bool,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Plain-text file with one flag per line, e.g. `max-n 6` or `long-run`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Stop with exit code 2 after this many enumeration nodes.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Resumable progress file for the census behind `tables`.
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub check: Option<Check>,
    /// Largest rank for `paving-bound`.
    #[arg(long, global = true)]
    pub rmax: Option<usize>,
    /// Injection policy for `random-matroid`: `geometric`, `none` or `fixed:<count>`.
    #[arg(long, global = true)]
    pub policy: Option<String>,
}

/// A parsed command line.
#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(
    name = "matroid-census",
    version,
    about = "Exact matroid counts and experiments on small ground sets"
)]
#[command(args_override_self = true)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

impl RunConfig {
    pub fn enum_config(&self) -> EnumConfig {
        let o = &self.options;
        let mut cfg = EnumConfig::default().with_workers(o.workers).with_long_run(o.long_run);
        if let Some(b) = o.budget {
            cfg = cfg.with_budget(b);
        }
        if let Some(p) = &o.checkpoint {
            cfg = cfg.with_checkpoint(p);
        }
        cfg
    }
}

/// Turns config-file lines into flag tokens. Blank lines and `#` comments are skipped.
pub fn config_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let (key, value) = match line.split_once(['=', ' ', '\t']) {
            Some((k, v)) => (k.trim(), Some(v.trim().trim_start_matches('=').trim())),
            None => (line, None),
        };
        out.push(format!("--{}", key.trim_start_matches('-')));
        if let Some(v) = value.filter(|v| !v.is_empty()) {
            out.push(v.to_string());
        }
    }
    out
}

fn find_config(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Parses `args` (program name first), splicing in `--config` flags ahead of
/// the explicit ones so the command line wins.
pub fn parse_args<I, T>(args: I) -> Result<RunConfig, ParseFailure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let mut args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    if let Some(path) = find_config(&args) {
        let text =
            std::fs::read_to_string(&path).map_err(|e| ParseFailure::Config(format!("{}: {e}", path.display())))?;
        let at = 1.min(args.len());
        args.splice(at..at, config_tokens(&text).into_iter().map(OsString::from));
    }
    RunConfig::try_parse_from(args).map_err(ParseFailure::Clap)
}

#[derive(Debug)]
pub enum ParseFailure {
    Clap(clap::Error),
    Config(String),
}

/// Output of one subcommand before it is written anywhere.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    /// Lines for standard error.
    pub notes: Vec<String>,
    pub code: i32,
}

impl Outcome {
    fn ok(body: String) -> Outcome {
        Outcome {
            body,
            notes: Vec::new(),
            code: EXIT_OK,
        }
    }
}

/// Executes a parsed command; `stdin` feeds `free-erect` and `erections`.
pub fn execute(config: &RunConfig, stdin: &mut dyn Read) -> crate::Result<Outcome> {
    match &config.command {
        Command::Tables => commands::tables(config),
        Command::Formulas => commands::formulas(config),
        Command::PavingBound => commands::paving_bound(config),
        Command::Plp => commands::plp(config),
        Command::Dominance => commands::dominance(config),
        Command::RandomMatroid => commands::random_matroid(config),
        Command::FreeErect { path } => commands::free_erect(&commands::read_input(path.as_deref(), stdin)?),
        Command::Erections { path } => commands::erections(&commands::read_input(path.as_deref(), stdin)?),
    }
}

/// Runs a whole command line and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let config = match parse_args(args) {
        Ok(c) => c,
        Err(ParseFailure::Clap(e)) => {
            let code = if e.use_stderr() { EXIT_SYNTAX } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
        Err(ParseFailure::Config(msg)) => {
            let _ = writeln!(stderr, "error: cannot read config file {msg}");
            return EXIT_IO;
        }
    };
    let outcome = match execute(&config, stdin) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    for note in &outcome.notes {
        let _ = writeln!(stderr, "{note}");
    }
    let written = match &config.options.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => stdout.write_all(outcome.body.as_bytes()).and_then(|_| stdout.flush()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_IO;
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..8".parse::<NRange>().unwrap().range(), 2..=8);
        assert_eq!("2..=8".parse::<NRange>().unwrap().range(), 2..=8);
        assert_eq!("5".parse::<NRange>().unwrap().range(), 5..=5);
        assert!("8..2".parse::<NRange>().is_err());
    }

    #[test]
    fn config_lines() {
        let text = "# defaults\nmax-n 6\nlong-run\nformat = md\n\n--workers=2\n";
        assert_eq!(
            config_tokens(text),
            ["--max-n", "6", "--long-run", "--format", "md", "--workers", "2"]
        );
    }

    #[test]
    fn flags_after_subcommand() {
        let c = parse_args(["x", "tables", "--max-n", "5", "--format", "md"]).unwrap();
        assert_eq!(c.command, Command::Tables);
        assert_eq!(c.options.max_n, Some(5));
        assert_eq!(c.options.format, Some(Format::Md));
        let c = parse_args(["x", "--max-n", "4", "tables", "--max-n", "5"]).unwrap();
        assert_eq!(c.options.max_n, Some(5));
    }
}
