use std::io::Write;
use std::process::ExitCode;

use mixcox_cli::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let outcome = run(std::env::args_os());
    let written = if outcome.exit_code == EXIT_USAGE {
        std::io::stderr().write_all(outcome.stdout.as_bytes())
    } else {
        std::io::stdout().write_all(outcome.stdout.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.exit_code as u8)
}
