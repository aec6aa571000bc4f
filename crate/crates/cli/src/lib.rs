//! `fracx`: command-line harness for fractional coloring of subcubic
//! triangle-free graphs.
//!
//! Every subcommand writes JSON lines to standard output and a short human
//! summary to standard error. Exit status: 0 success or feasible, 1 verified
//! infeasible or rejected, 2 usage or input error, 3 budget or resource
//! limit.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

mod commands;
pub mod input;
pub mod report;

pub use input::GraphArgs;
pub use report::{render_report, Report, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] fracx_core::Error),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use fracx_core::Error as E;
        match self {
            CliError::Core(
                E::MisCapExceeded { .. }
                | E::PaletteTooLarge(_)
                | E::GeneratorRange { .. }
                | E::TooManyVertices(_),
            ) => EXIT_RESOURCE,
            CliError::Io(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "fracx", version, about = "Fractional coloring of subcubic triangle-free graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Emit JSON lines (always on; accepted for scripts that pass it)
    #[arg(long, global = true)]
    pub json: bool,
    /// Report wall-clock time in elapsed_ms instead of 0
    #[arg(long, global = true)]
    pub timing: bool,
    /// Give up when a graph has more maximal independent sets than this
    #[arg(long, global = true, default_value_t = fracx_core::graph::DEFAULT_MIS_CAP)]
    pub mis_cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fractional chromatic number with primal and dual certificates
    Chif {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also emit the set coloring built from the primal solution
        #[arg(long)]
        coloring: bool,
    },
    /// Decide whether the graph has an f-coloring
    Feasible {
        #[command(flatten)]
        graph: GraphArgs,
        /// uniform:p/q, fb:<vertices> or file:<path>
        #[arg(long)]
        demands: String,
    },
    /// Check a set coloring against a demand function
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Coloring file: "N=<int>" then "v: c1,c2,..." lines
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        demands: String,
    },
    /// Fractional chromatic number of every connected subcubic triangle-free
    /// graph up to isomorphism
    Sweep {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        /// Upper bound to check chi_f against
        #[arg(long, default_value = "14/5")]
        bound: String,
        /// Also check f_B-feasibility for every nail B of every class
        #[arg(long)]
        nails: bool,
    },
    /// Nail test for one set B, or all nails with their f_B feasibility
    NailCheck {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated B; when absent every nail is listed
        #[arg(long)]
        nail: Option<String>,
        /// Also search for an (f_B, N)-coloring of each nail
        #[arg(long)]
        search: bool,
        /// Palette size for --search
        #[arg(long, default_value_t = 14)]
        colors: usize,
        /// Search node budget (falls back to FRACX_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exhaustive search for an (a:b)- or (f, N)-coloring
    Search {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        demands: Option<String>,
        #[arg(long = "N")]
        n_colors: Option<usize>,
        /// Search node budget (falls back to FRACX_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Weight scores W_v for a vertex weighting
    Wv {
        #[command(flatten)]
        graph: GraphArgs,
        /// File of "vertex p/q" lines
        #[arg(long)]
        weights: Option<String>,
        /// Draw random rational weights from this seed instead
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let env_budget = std::env::var("FRACX_BUDGET").ok();
    match commands::dispatch(&cli, env_budget.as_deref(), out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
