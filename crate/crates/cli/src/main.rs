use std::process::ExitCode;

use clap::Parser;

use pronormal_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, status)) => {
            print!("{}", render(&report, cli.common.format));
            ExitCode::from(status as u8)
        }
        Err((e, status)) => {
            eprintln!("error: {e}");
            ExitCode::from(status as u8)
        }
    }
}
