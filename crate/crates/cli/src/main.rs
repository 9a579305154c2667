use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(orbitcompat_cli::main_with(std::env::args()))
}
