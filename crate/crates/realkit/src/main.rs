use clap::Parser;
use realkit::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
