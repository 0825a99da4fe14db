use std::io::Write;

fn main() {
    let (code, out) = g2split::cli::run(std::env::args_os());
    if code == g2split::cli::EXIT_USAGE && !out.starts_with('{') {
        let _ = writeln!(std::io::stderr(), "{out}");
    } else {
        let _ = writeln!(std::io::stdout(), "{out}");
    }
    std::process::exit(code);
}
