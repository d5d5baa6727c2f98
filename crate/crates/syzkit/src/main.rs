use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    // An escaped panic means a broken internal invariant, not bad input.
    let code = panic::catch_unwind(syzkit::cli::main_entry).unwrap_or_else(|_| {
        eprintln!("error: internal invariant violated");
        4
    });
    ExitCode::from(code as u8)
}
