use clap::{Parser, Subcommand};
use kittab::exec::{render_json, render_text, run_session};
use kittab::session::parse_session;
use kittab_core::Error;
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "kittab", version, about = "Exact computer algebra for Kitt ideals and residual intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a session file
    Run {
        /// Path to the session file
        file: PathBuf,
        /// Emit one JSON object per command instead of text
        #[arg(long)]
        json: bool,
        /// Abort with exit code 3 after this many seconds
        #[arg(long)]
        timeout_secs: Option<u64>,
    },
    /// Run the built-in acceptance suites
    Selftest {
        /// Include the slow-tier criteria
        #[arg(long)]
        slow: bool,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn run_file(file: &PathBuf, json: bool) -> Result<String, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::domain(format!("cannot read {}: {}", file.display(), e)))?;
    let session = parse_session(&text)?;
    let outputs = run_session(&session)?;
    Ok(if json {
        render_json(&outputs)
    } else {
        render_text(&outputs)
    })
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            file,
            json,
            timeout_secs,
        } => {
            let work = move || run_file(&file, json);
            let result = match timeout_secs {
                None => work(),
                Some(secs) => {
                    let (tx, rx) = mpsc::channel();
                    std::thread::spawn(move || {
                        let _ = tx.send(work());
                    });
                    match rx.recv_timeout(Duration::from_secs(secs)) {
                        Ok(r) => r,
                        Err(_) => {
                            eprintln!("error: timeout after {} seconds", secs);
                            std::process::exit(3);
                        }
                    }
                }
            };
            match result {
                Ok(out) => print!("{}", out),
                Err(e) => {
                    eprintln!("error: {}", e);
                    std::process::exit(exit_code_for(&e));
                }
            }
        }
        Command::Selftest { slow } => {
            let ok = kittab::acceptance::run_all(slow, &mut std::io::stdout());
            if !ok {
                std::process::exit(1);
            }
        }
    }
}
