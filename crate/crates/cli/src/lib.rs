//! Command line front end for `thetasum-core`.
//!
//! [`parse_and_dispatch`] turns an argument vector into a [`CommandResult`];
//! the binary only prints it. Keeping the whole pipeline in the library lets
//! the integration tests drive it without spawning processes.

mod commands;
mod suites;

use std::fmt;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use thetasum_core::Error as CoreError;

pub use suites::{run_verification_suite, SuiteBounds, SUITES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Error => "error",
        })
    }
}

/// Outcome of one invocation. `payload` is present exactly when `status`
/// is [`Status::Ok`]; errors always carry at least one diagnostic.
#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Option<Value>,
    pub diagnostics: Vec<String>,
    pub exit_code: i32,
    /// What goes to stdout, already rendered in the requested format.
    pub stdout: Option<String>,
}

impl CommandResult {
    fn ok(payload: Value, stdout: String) -> Self {
        CommandResult {
            status: Status::Ok,
            payload: Some(payload),
            diagnostics: Vec::new(),
            exit_code: 0,
            stdout: Some(stdout),
        }
    }

    fn error(exit_code: i32, diagnostics: Vec<String>) -> Self {
        CommandResult {
            status: Status::Error,
            payload: None,
            diagnostics,
            exit_code,
            stdout: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;

/// Failure of a subcommand before anything was printed.
#[derive(Debug, Clone)]
pub(crate) enum Failure {
    /// Bad input: exit code 1.
    User(String),
    /// A configured cap or budget was hit: exit code 2.
    Resource(String),
    /// A verification suite found counterexamples: exit code 1, with the
    /// full report attached as a diagnostic.
    Counterexample(Value),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::User(e.to_string())
        }
    }
}

impl Failure {
    fn into_result(self) -> CommandResult {
        match self {
            Failure::User(msg) => CommandResult::error(EXIT_USER, vec![msg]),
            Failure::Resource(msg) => CommandResult::error(EXIT_RESOURCE, vec![msg]),
            Failure::Counterexample(report) => {
                let n = report["failures"].as_u64().unwrap_or(0);
                let suite = report["suite"].as_str().unwrap_or("?").to_string();
                CommandResult::error(
                    EXIT_USER,
                    vec![
                        format!("verification suite {suite} found {n} counterexample(s)"),
                        serde_json::to_string_pretty(&report).unwrap(),
                    ],
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "thetasum", version, about = "Exact character ring computations for C_n, A_{2n-1} and E6")]
pub(crate) struct Cli {
    /// Root system: C<n>, SL<2n>, A<2n-1> or E6.
    #[arg(long, global = true)]
    pub system: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Resource cap applied to every enumeration (orbit size, convolution
    /// work, multiplicity strata, Weyl group order).
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    /// Coordinates used by --weight: epsilon, dynkin or root. Defaults to
    /// dynkin for E6 and epsilon otherwise.
    #[arg(long, global = true)]
    pub basis: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub(crate) struct WeightArg {
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Debug, Args, Clone)]
pub(crate) struct CaseArgs {
    /// hyperelliptic, nonhyperelliptic or cubic-threefold.
    #[arg(long)]
    pub case: Option<String>,
    #[arg(long)]
    pub genus: Option<u32>,
}

#[derive(Debug, Args, Clone)]
pub(crate) struct CharInput {
    #[command(flatten)]
    pub weight: WeightArg,
    /// Use the orbit sum of the weight instead of the irreducible character.
    #[arg(long)]
    pub orbit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum CharMethod {
    Freudenthal,
    Weyl,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Command {
    /// Weyl orbit of a weight.
    Orbit(WeightArg),
    /// Whether --other lies below --weight in the dominance order.
    Dominance {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Reduce a dominant weight to a small dominated one and print the trace.
    Reduce {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Character of the irreducible representation with this highest weight.
    Char {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = CharMethod::Freudenthal)]
        method: CharMethod,
    },
    /// Dimension of the irreducible representation with this highest weight.
    Dim(WeightArg),
    /// Decompose V_weight (x) V_other into irreducibles.
    Tensor {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// n-th exterior power of a character.
    Lambda {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: CharInput,
        /// Compute through Adams operations instead of the weight multiset.
        #[arg(long = "virtual")]
        via_adams: bool,
    },
    /// n-th Adams operation of a character.
    Adams {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: CharInput,
    },
    /// Support of the component attached to a dominant weight.
    Support {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Summands of the theta divisor.
    Classify {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        bounds: SuiteBounds,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn parse_and_dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return clap_failure(e),
    };
    let format = cli.format;
    match commands::run(&cli) {
        Ok((payload, text)) => {
            let stdout = match format {
                Format::Json => serde_json::to_string_pretty(&payload).unwrap(),
                Format::Text => text,
            };
            CommandResult::ok(payload, stdout)
        }
        Err(f) => f.into_result(),
    }
}

fn clap_failure(e: clap::Error) -> CommandResult {
    let rendered = e.render().to_string();
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let text = rendered.trim_end().to_string();
            CommandResult::ok(serde_json::json!({ "help": text }), text)
        }
        ErrorKind::InvalidSubcommand => {
            CommandResult::error(EXIT_USER, vec![format!("unknown subcommand: {}", first_line(&rendered))])
        }
        _ => CommandResult::error(EXIT_USER, vec![format!("invalid arguments: {}", rendered.trim_end())]),
    }
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or("").trim_start_matches("error: ").to_string()
}
