use std::process::ExitCode;

use a4witt::commands::{self, CommandError, Outcome, Scope};
use a4witt::parse::parse_rational_arg;
use a4witt::report::Status;
use a4witt::suite::SuiteConfig;
use a4witt_core::arith::FactorConfig;
use a4witt_core::generic::{Sign, SymbolParams};
use a4witt_core::Rational;
use clap::{Parser, Subcommand, ValueEnum};

const CEILING_VAR: &str = "A4WITT_FACTOR_CEILING";

#[derive(Parser)]
#[command(name = "a4witt", version, about = "Exact checks for generic A4 quartics and their embedding obstruction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Prop2,
    Prop1,
    Criterion,
    All,
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, default_value_t = SuiteConfig::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

#[derive(clap::Args)]
struct Point {
    #[arg(long = "U", value_parser = rational, allow_hyphen_values = true)]
    u: Rational,
    #[arg(long = "V", value_parser = rational, allow_hyphen_values = true)]
    v: Rational,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        scope: ScopeArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Resolvent cubic Q of a quartic.
    Resolvent { quartic: String },
    /// Galois group of a cubic or quartic, with certificate.
    Galois { polynomial: String },
    /// Trace form Tr(x^2) of a quartic and its Witt invariant.
    Traceform { quartic: String },
    /// The two-parameter quartic at (U, V) and its obstruction symbol.
    Specialize {
        #[command(flatten)]
        point: Point,
    },
    /// Map criterion parameters (A, B, C, D, E) to (U, V).
    Param {
        #[arg(long = "A", value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long = "C", value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long = "D", value_parser = rational, allow_hyphen_values = true)]
        d: Rational,
        #[arg(long = "E", value_parser = rational, allow_hyphen_values = true)]
        e: Rational,
        /// Sign applied to a and b; the calibrated sign is -.
        #[arg(long, default_value = "-", value_parser = commands::parse_sign, allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Whether the field at (U, V) embeds in an SL2(F3) extension.
    Embeddable {
        #[command(flatten)]
        point: Point,
    },
    /// Calibrate the Witt convention and the criterion sign.
    Calibrate {
        #[command(flatten)]
        run: RunArgs,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational_arg(s).map_err(|e| e.to_string())
}

fn factor_config() -> Result<FactorConfig, CommandError> {
    match std::env::var(CEILING_VAR) {
        Ok(v) => v.trim().parse::<u128>().map(FactorConfig::with_ceiling).map_err(|_| {
            CommandError::Usage(format!("{CEILING_VAR} must be a positive integer below 2^128, got '{v}'"))
        }),
        Err(_) => Ok(FactorConfig::DEFAULT),
    }
}

fn run(cli: Cli) -> Outcome {
    let factor = factor_config()?;
    let suite = |run: &RunArgs| SuiteConfig { seed: run.seed, samples: run.samples, factor };
    match cli.command {
        Command::Verify { scope, run } => {
            let scope = match scope {
                ScopeArg::Prop2 => Scope::Prop2,
                ScopeArg::Prop1 => Scope::Prop1,
                ScopeArg::Criterion => Scope::Criterion,
                ScopeArg::All => Scope::All,
            };
            commands::verify(scope, &suite(&run))
        }
        Command::Resolvent { quartic } => commands::resolvent(&quartic),
        Command::Galois { polynomial } => commands::galois(&polynomial),
        Command::Traceform { quartic } => commands::traceform(&quartic, &factor),
        Command::Specialize { point } => commands::specialize(&point.u, &point.v, &factor),
        Command::Param { a, b, c, d, e, sign } => commands::param(&SymbolParams::new(a, b, c, d, e, sign)),
        Command::Embeddable { point } => commands::embeddable_cmd(&point.u, &point.v, &factor),
        Command::Calibrate { run } => commands::calibrate(&suite(&run)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, verdict)) => {
            for c in &report.claims {
                let mark = match c.status {
                    Status::Pass => "ok  ",
                    Status::Skipped => "skip",
                    Status::Fail => "FAIL",
                    Status::Error => "ERR ",
                };
                eprintln!("{mark} {}", c.id);
            }
            if let Some(seed) = report.seed {
                eprintln!("seed {seed}, {} ms", report.elapsed_ms);
            }
            println!("{}", report.to_json());
            if verdict {
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
