use std::io::Write;

fn main() {
    let (code, text) = cycnc::cli::run(std::env::args_os());
    // a closed pipe on stdout is not an error worth reporting
    let _ = if code == 2 {
        writeln!(std::io::stderr(), "{text}")
    } else {
        writeln!(std::io::stdout(), "{text}")
    };
    std::process::exit(code);
}
