use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sqfree_cli::{run, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.global.workers {
        if workers == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(EXIT_ERROR as u8);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .expect("the global pool is configured once");
    }
    let outcome = run(&cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
