//! `frankl` — certify FC-families for the union-closed sets conjecture.
//!
//! Machine-readable report lines go to stdout; human-oriented summaries and
//! warnings go to stderr. Exit codes: 0 success, 1 verification failure,
//! 2 parse error, 3 invalid input, 4 resource guard.

use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use frankl_cli::commands::{
    self, cmd_nef, cmd_oracle_closure, cmd_oracle_examples, cmd_oracle_uce_vs_ssn, cmd_table,
    cmd_verify, exit_code,
};
use frankl_cli::record::CandidateRecord;
use frankl_cli::report::RowVerdict;

#[derive(Parser)]
#[command(name = "frankl", version, about = "FC-family verification engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one candidate (family, weights) pair.
    Verify {
        /// Family as a JSON array of element arrays, e.g. [[0,1,2],[0,1,3]].
        #[arg(long)]
        family: String,
        /// Weights, positional: either CSV ("2,2,1") or a JSON array.
        #[arg(long)]
        weights: String,
        /// Label to report under.
        #[arg(long)]
        label: Option<String>,
    },
    /// Verify every record in a file, one JSON record per line.
    Table {
        #[arg(long)]
        file: PathBuf,
        /// Worker threads for row-level parallelism.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Compute non-equivalent representatives of the (n,k,m) families.
    Nef {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Structural filters applied before sieving: not533, not634.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Lift the n ≤ 7 guard.
        #[arg(long)]
        force: bool,
    },
    /// Cross-check the engine against its brute-force oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Replay the worked share/hypercube/projection examples.
    Examples,
    /// Exhaustive search-vs-enumeration sweep over a small domain.
    UceVsSsn {
        #[arg(long, default_value_t = 3)]
        domain: u32,
        #[arg(long, default_value_t = 3)]
        max_sets: usize,
        #[arg(long, default_value_t = 2)]
        max_weight: u64,
    },
    /// Random closure-fold vs powerset-formula comparison.
    Closure {
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 20260809)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_sets: usize,
    },
}

fn parse_weights(s: &str) -> Result<Vec<u64>, String> {
    let trimmed = s.trim();
    if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| e.to_string())
    } else {
        trimmed
            .split(',')
            .map(|part| part.trim().parse::<u64>().map_err(|e| e.to_string()))
            .collect()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { family, weights, label } => run_verify(&family, &weights, label),
        Command::Table { file, threads } => run_table(&file, threads),
        Command::Nef { n, k, m, filter, force } => run_nef(n, k, m, &filter, force),
        Command::Oracle { which } => run_oracle(which),
    };
    ExitCode::from(code as u8)
}

fn run_verify(family: &str, weights: &str, label: Option<String>) -> i32 {
    let family: Vec<Vec<u32>> = match serde_json::from_str(family) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("cannot parse --family: {e}");
            return exit_code::PARSE;
        }
    };
    let weights = match parse_weights(weights) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("cannot parse --weights: {e}");
            return exit_code::PARSE;
        }
    };
    let record = CandidateRecord { family, weights, label };
    let outcome = cmd_verify(&record);
    println!("{}", outcome.report.machine_line());
    match outcome.report.verdict {
        RowVerdict::Certified => eprintln!(
            "{}: certified as an FC-family in {} ms ({} nodes)",
            outcome.report.label, outcome.report.elapsed_ms, outcome.report.stats.nodes
        ),
        RowVerdict::NotCertified => eprintln!(
            "{}: NOT certified — this weight function admits an extension with negative share",
            outcome.report.label
        ),
        RowVerdict::Error => eprintln!(
            "{}: error: {}",
            outcome.report.label,
            outcome.report.error.as_deref().unwrap_or("unknown")
        ),
    }
    outcome.exit
}

fn run_table(file: &Path, threads: Option<usize>) -> i32 {
    let threads = threads.unwrap_or_else(|| {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    });
    let start = Instant::now();
    let outcome = match cmd_table(file, threads) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("cannot parse {}: {e}", file.display());
            return exit_code::PARSE;
        }
    };
    if outcome.reports.is_empty() {
        eprintln!("warning: {} contains no records", file.display());
        return exit_code::OK;
    }
    for report in &outcome.reports {
        println!("{}", report.machine_line());
    }
    let certified = outcome
        .reports
        .iter()
        .filter(|r| r.verdict == RowVerdict::Certified)
        .count();
    eprintln!(
        "{certified}/{} certified in {} ms",
        outcome.reports.len(),
        start.elapsed().as_millis()
    );
    for report in &outcome.reports {
        if report.verdict != RowVerdict::Certified {
            eprintln!("  failed: {}", report.label);
        }
    }
    outcome.exit
}

fn run_nef(n: u32, k: usize, m: usize, filters: &[String], force: bool) -> i32 {
    let mut not533 = false;
    let mut not634 = false;
    for f in filters {
        match f.as_str() {
            "not533" => not533 = true,
            "not634" => not634 = true,
            other => {
                eprintln!("unknown filter {other:?}; expected not533 or not634");
                return exit_code::PARSE;
            }
        }
    }
    match cmd_nef(n, k, m, not533, not634, force) {
        Ok(outcome) => {
            for rep in &outcome.representatives {
                println!(
                    "{}",
                    serde_json::to_string(rep.sets()).expect("family serializes")
                );
            }
            eprintln!(
                "{} candidates, {} after filtering, {} non-equivalent representatives",
                outcome.candidates,
                outcome.filtered,
                outcome.representatives.len()
            );
            exit_code::OK
        }
        Err(e) => {
            eprintln!("{e}");
            commands::exit_code_for(&e)
        }
    }
}

fn run_oracle(which: OracleCommand) -> i32 {
    let outcome = match which {
        OracleCommand::Examples => cmd_oracle_examples(),
        OracleCommand::UceVsSsn { domain, max_sets, max_weight } => {
            cmd_oracle_uce_vs_ssn(domain, max_sets, max_weight)
        }
        OracleCommand::Closure { trials, seed, max_sets } => {
            cmd_oracle_closure(trials, seed, max_sets)
        }
    };
    match outcome {
        Ok(result) => {
            for line in &result.lines {
                println!("{line}");
            }
            if result.discrepancies == 0 {
                exit_code::OK
            } else {
                exit_code::NOT_CERTIFIED
            }
        }
        Err(e) => {
            eprintln!("{e}");
            commands::exit_code_for(&e)
        }
    }
}
