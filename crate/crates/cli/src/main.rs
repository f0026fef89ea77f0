use std::process::ExitCode;

fn main() -> ExitCode {
    let result = pmalg_cli::run(std::env::args_os());
    if result.code == pmalg_cli::EXIT_USAGE {
        eprint!("{}", result.text);
    } else {
        print!("{}", result.text);
    }
    ExitCode::from(result.code as u8)
}
