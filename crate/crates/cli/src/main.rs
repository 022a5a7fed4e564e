use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = regsemi_cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match regsemi_cli::run(cli, &mut stdout) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
