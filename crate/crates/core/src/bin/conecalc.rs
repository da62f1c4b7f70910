use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use conecalc::cli::{parse_job, run_job, Job, Report, SCHEMA};
use conecalc::vfclasses::fixtures;
use serde_json::json;

/// Exact cone calculus over the rationals.
///
/// JSON reports go to stdout, a one-line summary to stderr. Exit codes: 0 ok, 2 input error,
/// 3 applicability or assertion failure, 4 genericity failure.
#[derive(Parser)]
#[command(name = "conecalc", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a job file.
    Run {
        job: PathBuf,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the seeded law suites.
    Check {
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<u64>,
        /// Only this instance index.
        #[arg(long)]
        instance: Option<u64>,
        /// Write replay jobs of failing instances into this directory.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        /// Corrupt one side of every law (self-test of the suites).
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// List the built-in fixtures.
    Fixtures,
}

fn emit(report: &Report, out: Option<&PathBuf>) -> ExitCode {
    let text = serde_json::to_string_pretty(report).unwrap();
    println!("{text}");
    if let Some(p) = out {
        if let Err(e) = std::fs::write(p, &text) {
            eprintln!("cannot write {}: {e}", p.display());
            return ExitCode::from(2);
        }
    }
    let tag = if report.exit_code == 0 { "ok" } else { "error" };
    eprintln!("{} [{tag}] {} ({} ms)", report.task, report.summary, report.elapsed_ms);
    ExitCode::from(report.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run { job, out, seed } => {
            let text = match std::fs::read_to_string(&job) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("cannot read {}: {e}", job.display());
                    return ExitCode::from(2);
                }
            };
            let job = match parse_job(&text) {
                Ok(j) => j,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(e.exit_code() as u8);
                }
            };
            emit(&run_job(&job, seed), out.as_ref())
        }
        Cmd::Check {
            suites,
            seed,
            count,
            instance,
            dump_dir,
            mutate,
        } => {
            let job = Job {
                schema: SCHEMA,
                task: "check".into(),
                params: json!({
                    "suites": suites,
                    "count": count,
                    "instance": instance,
                    "mutate": mutate,
                    "dump_dir": dump_dir,
                }),
                seed,
            };
            emit(&run_job(&job, None), None)
        }
        Cmd::Fixtures => {
            let all = fixtures::all();
            println!("{}", serde_json::to_string_pretty(&all).unwrap());
            for f in &all {
                eprintln!("{:<14} {}", f.name, f.summary);
            }
            ExitCode::SUCCESS
        }
    }
}
