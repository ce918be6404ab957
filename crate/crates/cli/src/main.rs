use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Construct, verify, classify and reduce harmonic matrices.
///
/// Matrix files use either the text form (a line with n, then n rows of n
/// space-separated symbols) or JSON ({"n": .., "rows": [[..]], "family": ..}).
///
/// Exit codes: 0 success, 1 failed verification or invalid matrix,
/// 2 parse or usage error.
#[derive(Debug, Parser)]
#[command(name = "harmonic", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    Rows,
    Columns,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the fundamental harmonic matrix of even order n.
    Generate {
        #[arg(long)]
        n: usize,
        /// Build from successive generator powers instead of the closed form.
        #[arg(long)]
        powers: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check harmonicity, symmetry, the Gaussian row property and family.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the adjacent-pair multiset along rows or columns.
    Transitions {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AxisArg::Rows)]
        axis: AxisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the four reflection-symmetry flags.
    Symmetry {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the canonical representative of the matrix's class.
    Canon {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether two harmonic matrices are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively enumerate harmonic matrices of a small even order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Emit the isomorphism-class catalog (JSON) instead of the grids.
        #[arg(long)]
        classes: bool,
        /// Only print how many grids there are.
        #[arg(long, conflicts_with = "classes")]
        count: bool,
        /// Do not fix the first row to 1..n.
        #[arg(long)]
        raw: bool,
        /// Allow orders above 6 (up to 8).
        #[arg(long)]
        allow_large: bool,
        /// Run on a single thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Apply the band reduction once, or down to order 2 with --chain.
    Reduce {
        /// Matrix file; defaults to the fundamental matrix of order --n.
        file: Option<PathBuf>,
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        n: Option<usize>,
        #[arg(long)]
        chain: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the deterministic Sudoku board with box side k (k odd).
    Sudoku {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// File with a one-line symbol relabeling applied to the board.
        #[arg(long)]
        relabel: Option<PathBuf>,
    },
    /// Print the first-order degenerate matrix of order 6.
    Degenerate {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
