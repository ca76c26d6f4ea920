use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(edgepow::cli::run())
}
