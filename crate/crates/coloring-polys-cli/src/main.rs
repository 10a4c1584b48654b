use std::io::Write;

fn main() {
    let mut stdout = std::io::stdout();
    let code = coloring_polys_cli::run_command(std::env::args_os(), &mut stdout);
    let _ = stdout.flush();
    std::process::exit(code);
}
