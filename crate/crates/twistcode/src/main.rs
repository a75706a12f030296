use std::process::ExitCode;

fn main() -> ExitCode {
    twistcode::cli::run()
}
