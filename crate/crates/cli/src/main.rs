use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use wprm_cli::{run, RunConfig, EXIT_INVALID};

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if help { 0 } else { EXIT_INVALID as u8 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = run(&config, &mut out);
    if out.flush().is_err() {
        return ExitCode::from(EXIT_INVALID as u8);
    }
    ExitCode::from(status as u8)
}
