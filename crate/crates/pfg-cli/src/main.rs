//! `pfg`: compute exact eigenvalue tables of the k-point-fixing graphs,
//! check them against the embedded references, and run verification suites.
//!
//! Exit codes: 0 success; 2 bad flags or arguments; 3 internal consistency
//! failure; 4 reference-table mismatch; 5 verification-suite failure.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pfg::golden::{check_tables, golden_blocks};
use pfg::spectrum::{spectrum, spectrum_from_values};
use pfg::suite::{run_many, SuiteKind};
use pfg::{Error, SpectrumTable};

#[derive(Parser)]
#[command(name = "pfg", version, about = "Exact spectra of k-point-fixing Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eigenvalue table of F(n,k)
    Spectrum {
        /// Symmetric group degree (n ≥ 2)
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        /// Fixed points required of the connection set (0 ≤ k < n)
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every embedded reference table and report mismatches
    Tables {
        /// Confirm the full recomputation (required)
        #[arg(long)]
        paper: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Override the suite's default size cap
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Asp0,
    Asp1,
    RecurrenceXcheck,
    OracleXcheck,
    Moments,
    Inequalities,
    Mass,
    All,
}

impl SuiteArg {
    fn kinds(self) -> Vec<SuiteKind> {
        match self {
            SuiteArg::Asp0 => vec![SuiteKind::Asp0],
            SuiteArg::Asp1 => vec![SuiteKind::Asp1],
            SuiteArg::RecurrenceXcheck => vec![SuiteKind::RecurrenceXcheck],
            SuiteArg::OracleXcheck => vec![SuiteKind::OracleXcheck],
            SuiteArg::Moments => vec![SuiteKind::Moments],
            SuiteArg::Inequalities => vec![SuiteKind::Inequalities],
            SuiteArg::Mass => vec![SuiteKind::Mass],
            SuiteArg::All => SuiteKind::ALL.to_vec(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Spectrum { n, k, format, out } => cmd_spectrum(n as usize, k as usize, format, out),
        Command::Tables { paper } => cmd_tables(paper),
        Command::Verify { suite, max_n } => cmd_verify(suite, max_n),
    }
}

/// Maps library errors onto the exit-code contract: domain problems are
/// argument errors (2), anything else is an internal consistency failure (3).
fn report_error(err: Error) -> u8 {
    eprintln!("error: {err}");
    match err {
        Error::Domain(_) => 2,
        _ => 3,
    }
}

fn cmd_spectrum(n: usize, k: usize, format: Format, out: Option<PathBuf>) -> u8 {
    if k >= n {
        eprintln!("error: --k must be below --n (got n = {n}, k = {k})");
        return 2;
    }
    let table = match obtain_table(n, k) {
        Ok(table) => table,
        Err(err) => return report_error(err),
    };
    let rendered = match format {
        Format::Csv => render_csv(&table),
        Format::Json => render_json(&table),
    };
    match out {
        None => {
            print!("{rendered}");
            0
        }
        Some(path) => match std::fs::write(&path, rendered) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                1
            }
        },
    }
}

/// Computes the table, going through the cache directory when PFG_CACHE_DIR
/// is set.  Cached values are validated (sampling plus the aggregate
/// identities); a rejected cache is recomputed and overwritten, so output
/// never depends on which path was taken.
fn obtain_table(n: usize, k: usize) -> Result<SpectrumTable, Error> {
    let Some(dir) = std::env::var_os("PFG_CACHE_DIR").map(PathBuf::from) else {
        return spectrum(n, k);
    };
    if let Some(values) = cache::load_validated(&dir, n, k) {
        match spectrum_from_values(n, k, &values) {
            Ok(table) => return Ok(table),
            Err(Error::TableInvariant(msg)) => {
                eprintln!("warning: cached table rejected ({msg}); recomputing")
            }
            Err(other) => return Err(other),
        }
    }
    let table = spectrum(n, k)?;
    if let Err(e) = cache::store(&dir, &table) {
        eprintln!("warning: cache write failed: {e}");
    }
    Ok(table)
}

fn render_csv(table: &SpectrumTable) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["lambda", "f", "eta", "multiplicity"])
        .unwrap();
    for e in &table.entries {
        writer
            .write_record([
                e.shape.to_string(),
                e.dim.to_string(),
                e.eta.to_string(),
                e.multiplicity.to_string(),
            ])
            .unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}

#[derive(Serialize)]
struct JsonTable {
    n: usize,
    k: usize,
    entries: Vec<JsonEntry>,
}

#[derive(Serialize)]
struct JsonEntry {
    lambda: Vec<usize>,
    f: String,
    eta: String,
    multiplicity: String,
}

fn render_json(table: &SpectrumTable) -> String {
    let doc = JsonTable {
        n: table.n,
        k: table.k,
        entries: table
            .entries
            .iter()
            .map(|e| JsonEntry {
                lambda: e.shape.parts().to_vec(),
                f: e.dim.to_string(),
                eta: e.eta.to_string(),
                multiplicity: e.multiplicity.to_string(),
            })
            .collect(),
    };
    let mut rendered = serde_json::to_string_pretty(&doc).unwrap();
    rendered.push('\n');
    rendered
}

fn cmd_tables(paper: bool) -> u8 {
    if !paper {
        eprintln!("error: tables requires --paper");
        return 2;
    }
    match check_tables() {
        Ok(diffs) if diffs.is_empty() => {
            for block in golden_blocks() {
                let scope = match block.min_first_part {
                    None => "full".to_string(),
                    Some(b) => format!("first part >= {b}"),
                };
                println!("table n={} ({scope}): {} rows ok", block.n, block.rows.len());
            }
            println!("all embedded tables reproduced exactly");
            0
        }
        Ok(diffs) => {
            for diff in &diffs {
                eprintln!("mismatch: {diff}");
            }
            eprintln!("{} mismatch(es)", diffs.len());
            4
        }
        Err(err) => report_error(err),
    }
}

fn cmd_verify(suite: SuiteArg, max_n: Option<usize>) -> u8 {
    match run_many(&suite.kinds(), max_n) {
        Err(err) => report_error(err),
        Ok(outcomes) => {
            let mut all_pass = true;
            for outcome in &outcomes {
                if outcome.passed() {
                    println!("suite {}: pass ({} cases)", outcome.suite, outcome.cases);
                } else {
                    all_pass = false;
                    println!(
                        "suite {}: FAIL ({} cases, {} failures)",
                        outcome.suite,
                        outcome.cases,
                        outcome.failures.len()
                    );
                    for failure in &outcome.failures {
                        eprintln!("  {}: {failure}", outcome.suite);
                    }
                }
            }
            if all_pass {
                0
            } else {
                5
            }
        }
    }
}
