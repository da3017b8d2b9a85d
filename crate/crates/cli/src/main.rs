use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covsys_cli::{commands, CliError, FieldSpec, Outcome, SystemFile};
use covsys_core::{GenerationLimits, Limits};

#[derive(Parser)]
#[command(name = "covsys", version, about = "Verify and analyze exact covering systems in rings of integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every element lies in exactly one class
    Verify(InputArgs),
    /// Moduli, repetition bounds, the induced cell partition and its checks
    Analyze(InputArgs),
    /// Dump the digit maps on every residue and the cell of every class
    Map(InputArgs),
    /// Generate an exact system by seeded random class splitting
    Construct(ConstructArgs),
}

#[derive(Args)]
struct InputArgs {
    /// System file, or `-` for stdin
    input: PathBuf,
    #[arg(long)]
    json: bool,
    /// Largest quotient ring to enumerate
    #[arg(long, default_value_t = 100_000)]
    cap: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Rationals,
    Quadratic,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum, default_value = "rationals")]
    field: FieldArg,
    /// Squarefree d for Q(sqrt(d))
    #[arg(long, allow_negative_numbers = true, required_if_eq("field", "quadratic"))]
    d: Option<i64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    steps: usize,
    /// Rational primes whose prime ideals make up the splitting pool
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    primes: Vec<u64>,
    /// Largest norm of the common modulus
    #[arg(long, default_value_t = 10_000)]
    max_norm: u64,
    #[arg(long, default_value_t = 64)]
    max_classes: usize,
    #[arg(long, default_value_t = 100_000)]
    cap: u64,
}

fn read_input(path: &PathBuf) -> Result<SystemFile, CliError> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    SystemFile::parse(&text)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Verify(a) => commands::verify(&read_input(&a.input)?, &Limits::with_residue_cap(a.cap), a.json),
        Command::Analyze(a) => commands::analyze(&read_input(&a.input)?, &Limits::with_residue_cap(a.cap), a.json),
        Command::Map(a) => commands::map(&read_input(&a.input)?, &Limits::with_residue_cap(a.cap), a.json),
        Command::Construct(a) => {
            let field = match a.field {
                FieldArg::Rationals => FieldSpec::Rationals,
                FieldArg::Quadratic => FieldSpec::Quadratic { d: a.d.unwrap_or_default() },
            };
            let gen = GenerationLimits {
                max_modulus_norm: a.max_norm,
                max_classes: a.max_classes,
                limits: Limits::with_residue_cap(a.cap),
            };
            let (file, generated) = commands::construct(&field, a.seed, a.steps, &a.primes, &gen)?;
            if generated.truncated {
                eprintln!("note: stopped after {} of {} steps at the generation limits", generated.steps, a.steps);
            }
            Ok(Outcome { stdout: file.to_json() + "\n", code: 0 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
