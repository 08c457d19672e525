use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gscheme_cli::{run, Command, Options, EXIT_MALFORMED};

#[derive(Parser)]
#[command(name = "gscheme", version, about = "Finite group scheme actions: checks and constructions on a JSON problem document")]
struct Args {
    command: Command,
    /// Problem document; `-` or omitted reads standard input.
    document: Option<PathBuf>,
    /// Human-readable tables instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for sampling commands.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match &args.document {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("gscheme: cannot read document: {e}");
            return ExitCode::from(EXIT_MALFORMED as u8);
        }
    };
    let outcome = run(args.command, &text, Options { pretty: args.pretty, seed: args.seed });
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                eprintln!("gscheme: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_MALFORMED as u8);
            }
        }
        None => print!("{}", outcome.stdout),
    }
    ExitCode::from(outcome.code as u8)
}
