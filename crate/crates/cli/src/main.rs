use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use slater_cli::{run, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap's own usage code (2) would collide with the truncation code.
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run(&cli, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code)
}
