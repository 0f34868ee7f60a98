//! `kh`: Gröbner bases, Milnor algebras and Koszul cohomology from the
//! command line.

mod args;
mod output;
mod run;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match run::run(&cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_usage() {
                eprintln!("\npolynomial grammar:\n{}", kh_core::poly::GRAMMAR);
            }
            ExitCode::from(err.code())
        }
    }
}
