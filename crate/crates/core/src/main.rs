use std::process::ExitCode;

fn main() -> ExitCode {
    tfns::cli::main_with_args(std::env::args_os())
}
