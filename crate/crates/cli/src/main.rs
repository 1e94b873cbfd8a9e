mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gsilt::input::fixtures;
use gsilt::kernel::DEFAULT_PRIME;
use gsilt::verify::{load_fixture, Parameters, Session, CHECK_IDS};
use gsilt::Error;

use report::{ErrorRecord, Report, TOOL_VERSION};

const USAGE_ERROR: u8 = 1;
const COMPUTATION_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "gsilt", version, about = "Gorenstein silting theory over finite-dimensional algebras over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Prime of the ground field.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    /// Largest module dimension in the atlas and the inventory.
    #[arg(long = "dim-cap", global = true, default_value_t = 16)]
    dim_cap: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cutoff for homological dimensions.
    #[arg(long, global = true, default_value_t = 6)]
    bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gorenstein status, Gdim and the Gorenstein-projective atlas.
    Analyze { spec: String },
    /// The indecomposable Gorenstein-projectives.
    Atlas { spec: String },
    /// tau_G-rigid inventory modules with minimal proper presentations.
    Rigid { spec: String },
    /// Classification of module-side test objects.
    Silting { spec: String },
    /// Two-term Gorenstein silting complexes with their endomorphism algebras.
    Complexes { spec: String },
    /// Run the check catalog, or a single check.
    Verify {
        spec: String,
        #[arg(long)]
        check: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Atlas { .. } => "atlas",
            Command::Rigid { .. } => "rigid",
            Command::Silting { .. } => "silting",
            Command::Complexes { .. } => "complexes",
            Command::Verify { .. } => "verify",
        }
    }

    fn spec(&self) -> &str {
        match self {
            Command::Analyze { spec }
            | Command::Atlas { spec }
            | Command::Rigid { spec }
            | Command::Silting { spec }
            | Command::Complexes { spec }
            | Command::Verify { spec, .. } => spec,
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("usage: gsilt <analyze|atlas|rigid|silting|complexes|verify> <spec> [options]; see gsilt --help");
    ExitCode::from(USAGE_ERROR)
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => report.to_text(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let spec = cli.command.spec();
    if fixtures::source(spec).is_none() && !std::path::Path::new(spec).is_file() {
        return usage_error(&format!("no bundled fixture or readable file named {spec:?}"));
    }
    if let Command::Verify { check: Some(id), .. } = &cli.command {
        if !CHECK_IDS.contains(&id.as_str()) {
            return usage_error(&format!("unknown check id {id:?}; known: {}", CHECK_IDS.join(", ")));
        }
    }
    let params = Parameters { prime: cli.prime, dim_cap: cli.dim_cap, seed: cli.seed, bound: cli.bound };
    let mut report = Report {
        tool_version: TOOL_VERSION.to_string(),
        prime: cli.prime,
        fixture: spec.to_string(),
        command: cli.command.name().to_string(),
        parameters: params,
        certificates: Vec::new(),
        result: None,
        error: None,
    };
    let outcome = load_fixture(spec, cli.prime).map_err(|e| (e, true)).and_then(|(label, alg)| {
        report.fixture = label.clone();
        let session = Session::new(&label, alg, params);
        let run = match &cli.command {
            Command::Analyze { .. } => commands::analyze(&session).map(Some),
            Command::Atlas { .. } => commands::atlas(&session).map(Some),
            Command::Rigid { .. } => commands::rigid(&session).map(Some),
            Command::Silting { .. } => commands::silting(&session).map(Some),
            Command::Complexes { .. } => commands::complexes(&session).map(Some),
            Command::Verify { check, .. } => {
                report.certificates = match check {
                    Some(id) => vec![session.run_check(id).expect("id checked above")],
                    None => session.run_suite(),
                };
                Ok(None)
            }
        };
        run.map_err(|e| (e, false))
    });
    let code = match outcome {
        Ok(body) => {
            report.result = body;
            0
        }
        Err((e @ (Error::FixtureError(_) | Error::ParseError(_)), true)) => {
            return usage_error(&e.to_string());
        }
        Err((e, _)) => {
            eprintln!("error: {e}");
            report.error = Some(ErrorRecord { kind: error_kind(&e), message: e.to_string() });
            COMPUTATION_ERROR
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: cannot write the report: {e}");
        return ExitCode::from(USAGE_ERROR);
    }
    ExitCode::from(code)
}
