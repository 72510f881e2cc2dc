use std::process::ExitCode;

fn main() -> ExitCode {
    rank2_fusion::cli::run()
}
