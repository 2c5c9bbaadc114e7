use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (outcome, err) = dialg::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    if let Some(e) = err {
        let _ = std::io::stderr().write_all(e.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}
