use std::io;

use clap::Parser;
use qbf_games::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let code = run(cli, &mut input, &mut out);
    std::process::exit(code);
}
