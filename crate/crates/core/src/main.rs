use std::process::ExitCode;

fn main() -> ExitCode {
    let out = cominq::cli::run(std::env::args_os());
    if out.exit_code == 2 {
        eprintln!("{}", out.payload.trim_end());
    } else {
        println!("{}", out.payload.trim_end());
    }
    ExitCode::from(out.exit_code as u8)
}
