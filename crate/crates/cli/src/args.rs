use std::path::PathBuf;

use bassforge::series::{parse_rational, Rational};
use bassforge::QuadraticSurd;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bassforge", version, about = "Exact Bass series and growth certificates")]
pub struct Cli {
    /// Truncation order for every expansion.
    #[arg(long, global = true, env = "BASSFORGE_ORDER", default_value_t = 50)]
    pub order: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bass series of a Golod ring from its h-vector.
    Golod {
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        edim: usize,
        /// h_0, …, h_(e-d), comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<u64>,
    },
    /// Bass series of a codimension two Golod ring of type r.
    Codim2 {
        #[arg(long)]
        depth: usize,
        #[arg(long = "type")]
        r: u64,
    },
    /// Bass series of the fiber product of two components given as JSON files.
    Fiber {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Bass series of a Teter ring from the Poincaré series of Q.
    Teter {
        /// `num=<coeffs> den=<coeffs>`, ascending degree.
        #[arg(long = "poincare-q", num_args = 2, value_names = ["num=..", "den=.."], allow_hyphen_values = true, required = true)]
        poincare_q: Vec<String>,
    },
    /// The table ρ_e(i) and its minimum R_e.
    Rho {
        #[arg(long)]
        edim: usize,
    },
    /// Artinian rings with m³ = 0.
    Artinian {
        #[command(subcommand)]
        command: ArtinianCommand,
    },
    /// Monotonicity and growth of a finite sequence.
    Analyze {
        #[arg(long, value_delimiter = ',', value_parser = rational_arg, allow_negative_numbers = true, required = true)]
        seq: Vec<Rational>,
        #[arg(long, default_value_t = 0)]
        from: usize,
        /// Candidate rate, e.g. `3/2` or `(1+sqrt5)/2`.
        #[arg(long, value_parser = surd_arg, allow_hyphen_values = true)]
        rate: Option<QuadraticSurd>,
    },
    /// Recompute the worked examples and report PASS/FAIL per check.
    Reproduce {
        #[arg(default_value = "all")]
        name: String,
        /// Embedding dimension for `example2`.
        #[arg(long)]
        edim: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArtinianCommand {
    /// Rate, case and certificate for one (a, e, r).
    Scholium {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Continue b_0, b_1 by the extremal recurrence.
    Extremal {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b0: u64,
        #[arg(long)]
        b1: u64,
    },
    /// Length consistency of a window of Betti numbers.
    Divides {
        #[arg(long)]
        lr: u64,
        #[arg(long)]
        lm: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<u64>,
    },
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub e: u64,
    #[arg(long)]
    pub r: u64,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn surd_arg(s: &str) -> Result<QuadraticSurd, String> {
    s.parse::<QuadraticSurd>().map_err(|e| e.to_string())
}
