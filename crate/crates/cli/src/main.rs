use std::process::ExitCode;

fn main() -> ExitCode {
    let result = thetasum_cli::parse_and_dispatch(std::env::args_os());
    if let Some(out) = &result.stdout {
        println!("{out}");
    }
    for d in &result.diagnostics {
        eprintln!("{d}");
    }
    ExitCode::from(result.exit_code as u8)
}
