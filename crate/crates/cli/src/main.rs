use std::process::ExitCode;

fn main() -> ExitCode {
    let cmd = match kesten_cli::parse_args(std::env::args_os()) {
        Ok(cmd) => cmd,
        Err(err) => {
            // help and version go to stdout with status 0, usage errors to stderr with 2
            let _ = err.print();
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let output = kesten_cli::run(&cmd);
    println!("{}", output.json);
    ExitCode::from(output.code)
}
