//! The `ccbch` command line: parameter rows, tables, verification sweeps and generator
//! polynomials for Hermitian dual-containing constacyclic BCH codes.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ccbch_core::finite_field::DEFAULT_FIELD_CAP;
use ccbch_core::table::{self, Format};
use ccbch_core::{delta_max, make_frame, CodeFrame};

mod genpoly;
mod verify;

pub use genpoly::{genpoly_record, GenpolyRecord};
pub use verify::{run_verify, Level, VerifyOutcome, VerifyReport, PARITY_NODE_BUDGET};

pub const FIELD_CAP_ENV: &str = "CCBCH_FIELD_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ccbch", version, about = "Hermitian dual-containing constacyclic BCH codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters of one code.
    Params(ParamsArgs),
    /// Parameters for a range of design distances.
    Table(TableArgs),
    /// Audit the closed forms against brute-force oracles.
    Verify(VerifyArgs),
    /// Dump the generator polynomial over F_{q²}.
    Genpoly(GenpolyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FrameArgs {
    /// Prime power q; the code alphabet is F_{q²}.
    #[arg(long)]
    pub q: u64,
    /// Even m >= 2; the code length is (q^(2m) - 1)/(q + 1).
    #[arg(long)]
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Markdown,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Markdown => Format::Markdown,
        }
    }
}

#[derive(Debug, Args)]
pub struct ParamsArgs {
    #[command(flatten)]
    pub frame: FrameArgs,
    #[arg(long)]
    pub delta: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub frame: FrameArgs,
    /// Smallest design distance (default 2).
    #[arg(long)]
    pub delta_min: Option<u64>,
    /// Largest design distance (default δ^max).
    #[arg(long)]
    pub delta_max: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub frame: FrameArgs,
    #[arg(long, value_enum, default_value_t = Level::Formulas)]
    pub level: Level,
    /// Codeword budget of the exhaustive minimum-distance search.
    #[arg(long, default_value_t = ccbch_core::oracle::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Report format; plain text when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct GenpolyArgs {
    #[command(flatten)]
    pub frame: FrameArgs,
    #[arg(long)]
    pub delta: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(ccbch_core::Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Core(ccbch_core::Error::Internal(_)) => EXIT_VERIFY_FAILED,
            Self::Core(_) => EXIT_USAGE,
            Self::Io(_) => EXIT_VERIFY_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(msg) => f.write_str(msg),
            Self::Core(e) => write!(f, "{e}"),
            Self::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ccbch_core::Error> for CliError {
    fn from(e: ccbch_core::Error) -> Self {
        Self::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

/// Reads `CCBCH_FIELD_CAP`, falling back to 2^26.
pub fn field_cap_from_env() -> Result<u64, CliError> {
    match std::env::var(FIELD_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&c| c >= 2)
            .ok_or_else(|| CliError::Usage(format!("{FIELD_CAP_ENV}={v:?} is not an integer >= 2"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_FIELD_CAP),
        Err(e) => Err(CliError::Usage(format!("{FIELD_CAP_ENV}: {e}"))),
    }
}

fn frame_of(a: FrameArgs) -> Result<CodeFrame, CliError> {
    Ok(make_frame(a.q, a.m)?)
}

fn cmd_params(a: &ParamsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let frame = frame_of(a.frame)?;
    let row = table::row(&frame, a.delta)?;
    out.write_all(table::render_row(&row, a.format.into()).as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let frame = frame_of(a.frame)?;
    let lo = a.delta_min.unwrap_or(2);
    let hi = match a.delta_max {
        Some(hi) => hi,
        None => delta_max(&frame)?,
    };
    if lo > hi {
        return Err(CliError::Usage(format!("--delta-min {lo} exceeds --delta-max {hi}")));
    }
    let rows = table::rows(&frame, lo, hi)?;
    let text = table::render_rows(&rows, a.format.into());
    match &a.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_genpoly(a: &GenpolyArgs, cap: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.format != FormatArg::Json {
        return Err(CliError::Usage("genpoly only supports --format json".into()));
    }
    let frame = frame_of(a.frame)?;
    let record = genpoly_record(&frame, a.delta, cap)?;
    let text = serde_json::to_string_pretty(&record).expect("record serializes");
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, cap: u64, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let json = match a.format {
        None => false,
        Some(FormatArg::Json) => true,
        Some(_) => return Err(CliError::Usage("verify supports plain text or --format json".into())),
    };
    let frame = frame_of(a.frame)?;
    let outcome = run_verify(&frame, a.level, a.budget, cap)?;
    if json {
        let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
        writeln!(out, "{text}")?;
    } else {
        out.write_all(outcome.report.render_text().as_bytes())?;
    }
    if let Some(e) = &outcome.skipped {
        writeln!(err, "error: {e}; checks at level {} were not run", a.level)?;
    }
    Ok(outcome.exit_code())
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Params(a) => cmd_params(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, field_cap_from_env()?, out, err),
        Command::Genpoly(a) => cmd_genpoly(a, field_cap_from_env()?, out),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
