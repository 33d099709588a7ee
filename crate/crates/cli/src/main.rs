use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arck::session::{parse_session, run, RunOptions, Session};
use clap::{Parser, Subcommand};

/// Decide Artin-Rees statements on ideals of graded quotient rings.
#[derive(Parser)]
#[command(name = "arck", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the tasks of a session file.
    Run {
        file: PathBuf,
        /// Emit one JSON object per task instead of text.
        #[arg(long)]
        json: bool,
        /// Run only the task with this label (its `name`, or `KIND-INDEX`).
        #[arg(long)]
        task: Option<String>,
        /// Gröbner degree cap for every ring.
        #[arg(long)]
        deg_cap: Option<u64>,
        /// Worker threads for Artin-Rees grids.
        #[arg(long)]
        threads: Option<usize>,
        /// Seed for the reduction-element search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Leave JSON `timings` empty so the output is reproducible.
        #[arg(long)]
        no_timings: bool,
    },
    /// Parse a session file and print it in canonical form.
    Fmt { file: PathBuf },
}

const EXIT_ERROR: u8 = 2;

fn load(path: &Path) -> Result<Session, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_session(&text).map_err(|e| format!("{}:{e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Fmt { file } => match load(&file) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_ERROR)
            }
        },
        Cmd::Run { file, json, task, deg_cap, threads, seed, no_timings } => {
            let session = match load(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_ERROR);
                }
            };
            let opts = RunOptions { deg_cap, threads, seed, task };
            let report = match run(&session, &opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_ERROR);
                }
            };
            if json {
                print!("{}", report.to_json(!no_timings));
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_status().code() as u8)
        }
    }
}
