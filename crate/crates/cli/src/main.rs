mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use humbert_core::arith::{Mode, Settings, Tolerance};

use commands::Invalid;

#[derive(Parser)]
#[command(
    name = "humbert",
    version,
    about = "Verify Humbert-Edge curves, their Kummer surfaces and branch moduli"
)]
struct Cli {
    /// exact, numeric or auto
    #[arg(long, global = true, default_value = "auto", value_parser = parse_mode)]
    mode: Mode,
    /// Numeric zero threshold (eps_zero)
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for generated inputs
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run independent checks on all cores
    #[arg(long, global = true)]
    parallel: bool,
    /// Print the JSON report instead of a table
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The 32 lines of the Kummer surface of y^2 = prod (x - a_j) and their incidence
    Lines {
        #[arg(allow_negative_numbers = true, value_name = "A")]
        a: Vec<String>,
    },
    /// Reduce a 4 x 6 diagonal net (text rows or curve JSON) to Vandermonde form
    Normalize { file: PathBuf },
    /// Decide whether two branch sets {0, 1, inf, lambdas} are Möbius equivalent
    Iso {
        #[arg(long)]
        n: usize,
        #[arg(allow_negative_numbers = true, value_name = "LHS")]
        lhs: Vec<String>,
        #[arg(last = true, allow_negative_numbers = true, value_name = "RHS")]
        rhs: Vec<String>,
    },
    /// Run every check on the curve with parameters lambda_1..lambda_3
    VerifyAll {
        #[arg(allow_negative_numbers = true, value_name = "LAMBDA")]
        lambdas: Vec<String>,
    },
    /// Write a deterministic corpus of random inputs
    Fixtures {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_mode(s: &str) -> Result<Mode, humbert_core::Error> {
    s.parse()
}

fn settings(cli: &Cli) -> Result<Settings, Invalid> {
    let tol = match cli.tol {
        Some(eps) => Tolerance::with_zero(eps)?,
        None => Tolerance::default(),
    };
    Ok(Settings {
        mode: cli.mode,
        tol,
        parallel: cli.parallel,
    })
}

/// clap accepts `-7` as a value but not `-7/3`; a leading space keeps such
/// tokens positional and is trimmed again when parsing.
fn shield_negative_fractions(arg: String) -> String {
    let is_fraction = arg
        .strip_prefix('-')
        .and_then(|rest| rest.split_once('/'))
        .is_some_and(|(p, q)| {
            [p, q]
                .iter()
                .all(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        });
    if is_fraction {
        format!(" {arg}")
    } else {
        arg
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(std::env::args().map(shield_negative_fractions));
    let start = Instant::now();
    let outcome = settings(&cli).and_then(|s| {
        let builder = match &cli.command {
            Command::Lines { a } => commands::lines(a, &s),
            Command::Normalize { file } => commands::normalize(file, &s),
            Command::Iso { n, lhs, rhs } => commands::iso(*n, lhs, rhs),
            Command::VerifyAll { lambdas } => commands::verify_all(lambdas, &s),
            Command::Fixtures { count, out } => commands::fixtures(*count, out, cli.seed),
        }?;
        Ok((builder, s))
    });
    match outcome {
        Ok((builder, s)) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            let report = builder.finish(&s, cli.seed, elapsed);
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
