//! Argument handling for the `symcheck` binary, kept in the library so the
//! whole command surface can be driven from tests.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::{catalog_entries, find_entry, CatalogEntry};
use crate::cayley::Convention;
use crate::error::Error;
use crate::report::{
    cmd_check_element, cmd_list, cmd_verify, element_markdown, list_markdown, parse_element, report_markdown,
    to_json, Format, RunConfig,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "symcheck", version, about = "Exact checks of nilpotent-orbit criteria on symmetric pairs")]
pub struct Cli {
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Samples per randomized check.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Sign convention for Cayley triples.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Adjusted)]
    pub convention: Convention,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Verify pairs concurrently.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalog.
    List,
    /// Full report for one pair.
    Analyze { id: String },
    /// Verify several pairs: a comma-separated id list or `all`.
    Verify {
        selection: Option<String>,
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Classify an element read from a JSON file.
    Element {
        id: String,
        #[arg(long)]
        file: PathBuf,
    },
}

/// What the binary prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn usage(message: String) -> Self {
        CliOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn from_error(err: &Error) -> Self {
        let code = if err.is_internal() { EXIT_INTERNAL } else { EXIT_USAGE };
        CliOutput {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

fn select(selection: &str) -> Result<Vec<CatalogEntry>, Error> {
    if selection == "all" {
        return catalog_entries();
    }
    let mut ids: Vec<&str> = selection.split(',').map(str::trim).collect();
    if ids.iter().any(|s| s.is_empty()) {
        return Err(Error::Input(format!("empty pair id in {selection:?}")));
    }
    ids.sort_unstable();
    ids.dedup();
    ids.into_iter().map(find_entry).collect()
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = RunConfig {
        seed: cli.seed,
        samples: cli.samples as usize,
        convention: cli.convention,
        parallel: cli.parallel,
    };
    let json = cli.format == Format::Json;
    match cli.command {
        Command::List => match catalog_entries().and_then(cmd_list) {
            Ok(rows) => CliOutput {
                code: EXIT_PASS,
                stdout: if json { to_json(&rows) } else { list_markdown(&rows) },
                stderr: String::new(),
            },
            Err(e) => CliOutput::from_error(&e),
        },
        Command::Analyze { id } => match find_entry(&id) {
            Ok(entry) => verify_output("analyze", vec![entry], &config, json),
            Err(e) => CliOutput::from_error(&e),
        },
        Command::Verify { selection, pairs } => {
            let chosen = match (selection, pairs) {
                (Some(a), Some(b)) if a != b => {
                    return CliOutput::usage(format!("conflicting pair selections {a:?} and {b:?}"))
                }
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => "all".to_string(),
            };
            match select(&chosen) {
                Ok(entries) => verify_output("verify", entries, &config, json),
                Err(e) => CliOutput::from_error(&e),
            }
        }
        Command::Element { id, file } => {
            let entry = match find_entry(&id) {
                Ok(entry) => entry,
                Err(e) => return CliOutput::from_error(&e),
            };
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return CliOutput::usage(format!("cannot read {}: {e}", file.display())),
            };
            let element = match parse_element(&entry.algebra, &text) {
                Ok(x) => x,
                Err(e) => return CliOutput::usage(e.to_string()),
            };
            match cmd_check_element(entry, &element, &config) {
                Ok(report) => CliOutput {
                    code: report.exit_code,
                    stdout: if json { to_json(&report) } else { element_markdown(&report) },
                    stderr: String::new(),
                },
                Err(e) if e.is_internal() => CliOutput::from_error(&e),
                Err(e) => CliOutput {
                    code: EXIT_FAIL,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                },
            }
        }
    }
}

fn verify_output(command: &str, entries: Vec<CatalogEntry>, config: &RunConfig, json: bool) -> CliOutput {
    let report = cmd_verify(command, entries, config);
    let stderr = report.failures.iter().map(|f| format!("FAIL {f}\n")).collect();
    CliOutput {
        code: report.exit_code,
        stdout: if json { to_json(&report) } else { report_markdown(&report) },
        stderr,
    }
}
