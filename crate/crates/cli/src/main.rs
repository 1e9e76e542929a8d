use clap::Parser;

use usg_cli::args::Cli;
use usg_cli::commands::run;

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.exit);
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.exit);
        }
    }
}
