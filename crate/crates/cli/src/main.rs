use std::io::{self, Write};

fn main() {
    if let Err(e) = graph_inertia_cli::configure_workers() {
        eprintln!("error: {e}");
        std::process::exit(graph_inertia_cli::EXIT_USAGE);
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = graph_inertia_cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
