use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(nsfn::cli::main_with_args(std::env::args_os()) as u8)
}
