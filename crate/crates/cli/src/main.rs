use clap::Parser;
use dgmatch_cli::{run, Cli, RunConfig};

fn main() {
    let config = RunConfig::from(Cli::parse());
    let code = run(
        &config,
        std::io::stdin().lock(),
        std::io::stdout().lock(),
        std::io::stderr().lock(),
    );
    std::process::exit(code);
}
