use clap::Parser;
use schurweyl_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    std::process::exit(schurweyl_cli::main_with(&cli) as i32);
}
