use clap::Parser;

use k3fm::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            report.exit_status
        }
        Err(e) => {
            eprintln!("k3fm: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
