//! Command-line front end for the `schurweyl` library.

pub mod args;
pub mod commands;
pub mod report;
pub mod verify;

use args::{Cli, Command, Format};
use report::{Report, Status};

pub use commands::{cmd_bound, cmd_matrices, cmd_maximize, cmd_state, cmd_sweep, cmd_tableaux};
pub use verify::cmd_verify;

/// Output format requested by a command line.
pub fn format_of(command: &Command) -> Format {
    match command {
        Command::Bound(a) => a.format,
        Command::Tableaux(a) => a.format,
        Command::Verify(a) => a.format,
        Command::Maximize(a) => a.format,
        Command::Sweep(a) => a.format,
        Command::Matrices(_) | Command::State(_) => Format::Json,
    }
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Result<Report, schurweyl::Error> {
    match &cli.command {
        Command::Bound(a) => cmd_bound(a),
        Command::Tableaux(a) => cmd_tableaux(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Maximize(a) => cmd_maximize(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Matrices(a) => cmd_matrices(a),
        Command::State(a) => cmd_state(a),
    }
}

/// Run, print and return the exit status.
pub fn main_with(cli: &Cli) -> Status {
    match run(cli) {
        Ok(report) => {
            print!("{}", report.render(format_of(&cli.command)));
            report.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            Status::UsageError
        }
    }
}
