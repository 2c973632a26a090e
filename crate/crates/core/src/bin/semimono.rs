use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use semimonotone::cli::{configure_workers, run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let result = configure_workers().and_then(|()| run(config, &mut lock));
    let _ = lock.flush();
    match result {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            eprintln!("semimono: {e}");
            ExitCode::from(2)
        }
    }
}
