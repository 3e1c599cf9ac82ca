use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = absind::cli::dispatch(std::env::args_os().skip(1));
    let _ = std::io::stdout().write_all(&outcome.stdout);
    let _ = std::io::stderr().write_all(&outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
