//! `slicebr`: slice Burnside ring computations from the command line.

mod commands;
mod slices;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "slicebr", version, about = "Exact slice Burnside ring computations for small finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest group order accepted from a group spec.
    #[arg(long, default_value_t = slice_burnside::group::DEFAULT_ORDER_CAP, global = true)]
    pub order_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, subgroup count and slice class count.
    Group { spec: String },
    /// The table of marks, rows and columns labelled by slice classes.
    Marks { spec: String },
    /// Coefficients of every primitive idempotent.
    Idempotents { spec: String },
    /// Product of two basis elements, each given as "T=g1,g2;S=g1".
    Mul { spec: String, a: String, b: String },
    /// Deflation constants m, m° and the classical constant of S by S∩N.
    Mconst { spec: String, s: String, n: String },
    /// Slice classes all of whose nontrivial deflation constants vanish.
    Tslices { spec: String },
    /// B-group test for every p-group up to the given order.
    Bgroups {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        prime: usize,
    },
    /// Dimension of a named ideal at a group.
    IdealDim {
        spec: String,
        #[arg(long)]
        family: String,
    },
    /// Groups of smallest order where a named ideal is nonzero.
    MinimalGroups {
        #[arg(long)]
        family: String,
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Bounded closure of the ideal generated by one slice, e.g. "elab:3^3:[g1,g2,g3],[g1,g2]".
    Closure {
        #[arg(long)]
        seed: String,
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        bound: usize,
        /// Leave out the Frattini product move.
        #[arg(long)]
        no_frattini_products: bool,
    },
    /// Closure conditions for a named family over a bounded universe.
    CheckFamily {
        #[arg(long)]
        family: String,
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Runs the full verification suite.
    Verify {
        /// Compare formula and oracle on every biset operation.
        #[arg(long)]
        deep: bool,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
    },
}

/// Why a command failed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A computation error or a failed check: exit 1.
    Failed(String),
}

impl From<slice_burnside::Error> for Failure {
    fn from(e: slice_burnside::Error) -> Self {
        use slice_burnside::Error::*;
        match e {
            Parse { .. } | OrderCap { .. } | InvalidParameter(_) | NotASlice(_) | NotNormal(_)
            | NotContained(_) | NotInUniverse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
