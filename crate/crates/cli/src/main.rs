use std::io;
use std::process::ExitCode;

use laperm::app::MAX_N_VAR;

fn main() -> ExitCode {
    let max_n = std::env::var(MAX_N_VAR).ok();
    let code = laperm::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        max_n.as_deref(),
    );
    ExitCode::from(code as u8)
}
