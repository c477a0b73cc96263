//! `ospy`: classification and exact verification for `X(osp(2n+1|2m))`.

mod commands;
mod fixtures;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CmdResult, ModuleArgs, RmatrixArgs};

#[derive(Debug, Parser)]
#[command(name = "ospy", version, about = "Exact computations for the orthosymplectic Yangian X(osp(2n+1|2m))")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every sampled point.
    #[arg(long, global = true, env = "OSPY_SEED", default_value_t = ospy::sampling::DEFAULT_SEED)]
    seed: u64,

    /// Number of sample points per identity.
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,

    /// Truncation order K of series in u⁻¹.
    #[arg(long, global = true, default_value_t = 8)]
    order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a highest weight read from a weight JSON file.
    Classify {
        /// Weight JSON path, or `builtin:NAME` for a bundled example.
        #[arg(long = "input", value_name = "PATH")]
        input_flag: Option<String>,
        #[arg(value_name = "PATH")]
        input: Option<String>,
    },

    /// Transport a highest weight to another parity sequence.
    Reflect {
        #[arg(long = "input", value_name = "PATH")]
        input_flag: Option<String>,
        #[arg(value_name = "PATH")]
        input: Option<String>,
        #[arg(long, value_name = "BITS")]
        to_parity: String,
    },

    /// Search for a splitting into finite-dimensional linear weights.
    Split {
        #[arg(long = "input", value_name = "PATH")]
        input_flag: Option<String>,
        #[arg(value_name = "PATH")]
        input: Option<String>,
        /// Search every sequence on the chain from the standard one to 0…01…1.
        #[arg(long)]
        all_parities: bool,
    },

    /// Hook partition tuples and their odd-reflection consistency.
    Hook {
        /// Hook JSON `{"m":…,"n":…,"gamma":[…]}`.
        #[arg(long, conflicts_with = "gamma")]
        input: Option<String>,
        /// Comma-separated row lengths, e.g. `3,1`.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },

    /// Check P, Q and the Yang–Baxter equation for R(u).
    VerifyRmatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_name = "BITS")]
        parity: Option<String>,
    },

    /// Build a module and check its relations, highest weight and centre.
    BuildModule {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Defaults to the standard sequence, or 0…01…1 for `flat`.
        #[arg(long, value_name = "BITS")]
        parity: Option<String>,
        /// `vector`, `sharp` or `flat`.
        #[arg(long, default_value = "vector")]
        kind: String,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        shift: String,
    },

    /// List the bundled examples, or print one.
    Examples { name: Option<String> },
}

fn pick(flag: Option<String>, positional: Option<String>) -> Result<String, commands::InputError> {
    match (flag, positional) {
        (Some(p), None) | (None, Some(p)) => Ok(p),
        (Some(_), Some(_)) => Err(commands::InputError { code: "E_USAGE", message: "input given twice".into() }),
        (None, None) => Err(commands::InputError { code: "E_USAGE", message: "missing input".into() }),
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Classify { input_flag, input } => commands::run_classify(&pick(input_flag.clone(), input.clone())?),
        Command::Reflect { input_flag, input, to_parity } => {
            commands::run_reflect(&pick(input_flag.clone(), input.clone())?, to_parity)
        }
        Command::Split { input_flag, input, all_parities } => {
            commands::run_split(&pick(input_flag.clone(), input.clone())?, *all_parities)
        }
        Command::Hook { input, gamma, m, n } => commands::run_hook(input.as_deref(), gamma.as_deref(), *m, *n),
        Command::VerifyRmatrix { n, m, parity } => commands::run_verify_rmatrix(&RmatrixArgs {
            n: *n,
            m: *m,
            parity: parity.as_deref(),
            samples: cli.samples,
            seed: cli.seed,
        }),
        Command::BuildModule { n, m, parity, kind, d, shift } => commands::run_build_module(&ModuleArgs {
            n: *n,
            m: *m,
            parity: parity.as_deref(),
            kind,
            d: *d,
            shift,
            samples: cli.samples,
            order: cli.order,
            seed: cli.seed,
        }),
        Command::Examples { name } => commands::run_examples(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&outcome.report).expect("reports serialize") + "\n"
            } else {
                outcome.text
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}
