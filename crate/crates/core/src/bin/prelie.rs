use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use prelie::verify::{self, Check, Format, VerifyConfig};

#[derive(Parser)]
#[command(name = "prelie", version, about = "Exact verification of pre-Lie operad structure results")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks by id, or `all`.
    Verify {
        #[arg(required = true, value_name = "CHECK-ID|all")]
        checks: Vec<String>,
        /// Largest arity for the module and closure checks; 7 is long-running.
        #[arg(long, default_value_t = 6)]
        max_arity: usize,
        /// Largest arity for the quotient dimension check.
        #[arg(long, default_value_t = 5)]
        quotient_max_arity: usize,
        /// Truncation order of the series check.
        #[arg(long, visible_alias = "order", default_value_t = 8)]
        egf_order: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        parallel: usize,
        /// Seed of the randomized coherence checks.
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
    /// List the check ids.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for c in Check::ALL {
                println!("{:<22} {}", c.id(), c.description());
            }
            ExitCode::SUCCESS
        }
        Command::Verify { checks, max_arity, quotient_max_arity, egf_order, format, parallel, seed } => {
            let format = match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Json => Format::Json,
            };
            let config = VerifyConfig { checks, max_arity, quotient_max_arity, egf_order, format, parallel, seed };
            let report = match verify::run(config) {
                Ok(report) => report,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
