use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use g2_hecke_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.into_config().and_then(|cfg| run(&cfg));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("g2hecke: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
