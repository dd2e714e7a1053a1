use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(alpha_spectra::cli::run(std::env::args()))
}
