use std::io::Write;

fn main() {
    if let Err(e) = polefiber::cli::app::configure_threads() {
        eprintln!("error: {e}");
        std::process::exit(polefiber::cli::app::EXIT_USAGE);
    }
    let out = polefiber::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
