use std::io::Write;
use std::process::ExitCode;

use balanceable_cli::{run, Cli};
use clap::error::ErrorKind;
use clap::Parser;

/// Sizes the worker pool from `BALANCE_WORKERS` when it is set.
fn init_workers() -> Result<(), String> {
    let Ok(raw) = std::env::var("BALANCE_WORKERS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("BALANCE_WORKERS must be a positive integer, got {raw:?}"))?;
    if n == 0 {
        return Err("BALANCE_WORKERS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Err(msg) = init_workers() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
