//! Thin command-line wrapper over [`circulant::cli`].

use clap::{Args, Parser, Subcommand};

use circulant::cli::{self, Command, CommandRequest, OutputFormat, RunOutput};

#[derive(Parser)]
#[command(
    name = "circulant",
    version,
    about = "Exact singularity tests and determinants for circulant graphs and digraphs"
)]
struct CliArgs {
    #[command(subcommand)]
    command: CliCommand,
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args)]
struct RowArgs {
    /// First row as comma-separated integers, e.g. `0,1,0,1`.
    #[arg(long)]
    row: String,
    /// Declared order; must match the row length when given.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Exact singularity verdict with witness divisors and zero exponents.
    Classify {
        #[command(flatten)]
        row: RowArgs,
    },
    /// Exact determinant with its per-divisor resultant factors.
    Det {
        #[command(flatten)]
        row: RowArgs,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        check: bool,
    },
    /// Numeric eigenvalues gamma(zeta_n^k) for k = 0..n-1.
    Spectrum {
        #[command(flatten)]
        row: RowArgs,
        /// Threshold below which an eigenvalue modulus counts as zero.
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
    /// Closed-form singularity prediction for a named family,
    /// e.g. `power-cycle:n=8,r=3`.
    Predict {
        /// Family text form `<kind>:<k=v>(,<k=v>)*`.
        #[arg(long)]
        family: String,
    },
    /// Sweep predicates against the brute-force determinant.
    Verify {
        /// `all`, a family kind (e.g. `power-cycle`), or `random`.
        #[arg(long)]
        family: String,
        /// Largest order to sweep.
        #[arg(long = "n-max", default_value_t = 24)]
        n_max: usize,
        /// Sample count for `--family random`.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// RNG seed for `--family random`.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Wall-time ladder: resultant-path determinant vs brute force.
    Bench {
        /// Trim the ladder (64, 128, 256, 512) to sizes <= n-max.
        #[arg(long = "n-max", default_value_t = 512)]
        n_max: usize,
        /// Runs per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Seed for the benchmarked rows.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse_format(text: &str) -> Result<OutputFormat, String> {
    match text {
        "json" => Ok(OutputFormat::Json),
        "table" => Ok(OutputFormat::Table),
        other => Err(format!("unknown format {other:?}; expected json or table")),
    }
}

fn build_request(args: CliArgs) -> Result<CommandRequest, cli::CliError> {
    let command = match args.command {
        CliCommand::Classify { row } => Command::Classify {
            spec: cli::spec_from_flags(&row.row, row.n)?,
        },
        CliCommand::Det { row, check } => Command::Det {
            spec: cli::spec_from_flags(&row.row, row.n)?,
            check,
        },
        CliCommand::Spectrum { row, tolerance } => Command::Spectrum {
            spec: cli::spec_from_flags(&row.row, row.n)?,
            tolerance,
        },
        CliCommand::Predict { family } => Command::Predict {
            family: family.parse()?,
        },
        CliCommand::Verify {
            family,
            n_max,
            samples,
            seed,
        } => Command::Verify {
            target: cli::parse_verify_target(&family)?,
            n_max,
            samples,
            seed,
        },
        CliCommand::Bench {
            n_max,
            samples,
            seed,
        } => Command::Bench {
            n_max,
            samples,
            seed,
        },
    };
    Ok(CommandRequest {
        command,
        format: args.format,
    })
}

fn main() {
    let args = CliArgs::parse();
    let outcome = build_request(args).and_then(|request| cli::run(&request));
    match outcome {
        Ok(RunOutput { status, body }) => {
            print!("{body}");
            std::process::exit(status);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
