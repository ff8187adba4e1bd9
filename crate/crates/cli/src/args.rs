use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Evaluate and verify matrix elements of Lorentz group representations.
#[derive(Parser, Debug)]
#[command(name = "lorentz", version, about, long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; JSON lines unless stated otherwise per subcommand.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Override a tolerance, e.g. `--tol ode=1e-7`. Repeatable.
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,

    /// Seed for randomly sampled verification points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// TOML file with tolerances and the matrix size cap; flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one function at a point, or along one grid axis.
    Eval {
        family: String,
        /// Parameters as `key=value`; half-integers as `3/2` or `d3`.
        params: Vec<String>,
        /// `axis:start:stop:count`, where axis is a real parameter.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Tabulate a function over the product of one or more grid axes (CSV by default).
    Table {
        family: String,
        params: Vec<String>,
        #[arg(long, required = true)]
        grid: Vec<String>,
    },
    /// Dump the representation matrix `T_l(g)`.
    Matrix { params: Vec<String> },
    /// Run a verification suite: ode, laplace, addition, homomorphism, casimir or all.
    Verify { suite: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}
