use std::process::ExitCode;

fn main() -> ExitCode {
    triwalk::cli::main()
}
