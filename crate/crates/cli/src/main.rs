use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use derivscope::verifier::VerifyConfig;
use derivscope::{DerivationParams, Rational};
use derivscope_cli::{
    catalog_listing, cmd_catalog, cmd_derive, cmd_info, cmd_phi, cmd_verify, default_s_samples, default_t_set,
    parse_rational, parse_rational_list, threads_from_env, CliError, Outcome, VerifyTarget,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational written p or p/q"))
}

/// Comma-separated rationals as one flag value.
#[derive(Clone)]
struct RationalList(Vec<Rational>);

fn rational_list_arg(s: &str) -> Result<RationalList, String> {
    parse_rational_list(s)
        .map(RationalList)
        .ok_or_else(|| format!("`{s}` is not a comma-separated list of rationals"))
}

/// Exact derivation spaces and invariants of anti-commutative algebras.
///
/// Algebra files start with `dim <n>`, followed by lines `i j k value`
/// giving the coefficient of e_k in μ(e_i, e_j), 0-based with i < j.
#[derive(Parser)]
#[command(name = "derivscope", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the derived algebra, center, Ω and related subspaces.
    Info { file: PathBuf },
    /// Basis of the (α,β,γ)-derivation space.
    Derive {
        file: PathBuf,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        beta: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        gamma: Rational,
    },
    /// φ(t) = dim D(t,1,0) for each t.
    Phi {
        file: PathBuf,
        #[arg(long, value_parser = rational_list_arg, allow_hyphen_values = true)]
        t_set: Option<RationalList>,
    },
    /// Run the verifier on one file or on the built-in catalog.
    Verify {
        #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
        file: Option<PathBuf>,
        #[arg(long)]
        catalog: bool,
        #[arg(long, value_parser = rational_list_arg, allow_hyphen_values = true)]
        t_set: Option<RationalList>,
        #[arg(long, value_parser = rational_list_arg, allow_hyphen_values = true)]
        s_samples: Option<RationalList>,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
    /// `catalog list`, or write a named algebra: `catalog As 2 -o as2.alg`.
    Catalog {
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn print(outcome: Outcome) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(&outcome.document).expect("documents are plain JSON"));
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Info { file } => Ok(print(cmd_info(&file)?)),
        Command::Derive {
            file,
            alpha,
            beta,
            gamma,
        } => Ok(print(cmd_derive(&file, &DerivationParams::new(alpha, beta, gamma))?)),
        Command::Phi { file, t_set } => Ok(print(cmd_phi(&file, &t_set.map_or_else(default_t_set, |l| l.0))?)),
        Command::Verify {
            file,
            catalog,
            t_set,
            s_samples,
            seed,
        } => {
            let config = VerifyConfig {
                t_set: t_set.map_or_else(default_t_set, |l| l.0),
                s_samples: s_samples.map_or_else(default_s_samples, |l| l.0),
                seed,
                threads: threads_from_env(std::env::var("DERIVSCOPE_THREADS").ok().as_deref())?,
                ..VerifyConfig::default()
            };
            let target = match (&file, catalog) {
                (Some(path), false) => VerifyTarget::File(path),
                _ => VerifyTarget::Catalog,
            };
            Ok(print(cmd_verify(target, &config)?))
        }
        Command::Catalog { args, output } => {
            let (name, params) = args.split_first().expect("clap requires at least one argument");
            let text = if name == "list" && params.is_empty() {
                catalog_listing()
            } else {
                cmd_catalog(name, params)?
            };
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
