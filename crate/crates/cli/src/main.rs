use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use hypermoment_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = stdout.write_all(out.stdout.as_bytes());
    ExitCode::from(out.code)
}
