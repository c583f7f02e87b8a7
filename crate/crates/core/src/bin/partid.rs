use std::io;
use std::process::ExitCode;

use partid::sweep::{run, Registry};

fn main() -> ExitCode {
    let code = run(std::env::args_os(), &Registry::standard(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
