use std::io::{stderr, stdout};

fn main() {
    let mut out = stdout().lock();
    let mut err = stderr().lock();
    let code = fermat_lab::cli::run(std::env::args_os(), &mut out, &mut err);
    std::process::exit(code);
}
