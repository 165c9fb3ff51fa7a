//! `vknots`: compute invariants of signed Gauss codes from the shell.
//!
//! Exit status: 0 on success, 1 when a verification fails or a comparison
//! does not match `--expect`, 2 on unreadable input, 3 when an invariant's
//! precondition does not hold for the diagram.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "vknots", version, about = "Invariants of virtual knots and links given as signed Gauss codes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Extra catalog file for resolving names (name<TAB>code[<TAB>tags]).
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Invariant selection shared by several subcommands.
#[derive(Debug, Clone, Args)]
pub struct InvArgs {
    /// Invariant name, optionally with arguments: `fnmk` or `fnmk(1,1,1)`.
    /// Repeat or separate with `;` for several.
    #[arg(long = "inv", value_name = "NAME")]
    pub inv: Vec<String>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    /// Component number, starting at 1.
    #[arg(long)]
    pub i: Option<usize>,
}

/// Fingerprint settings for formal sums.
#[derive(Debug, Clone, Args)]
pub struct FlatArgs {
    /// Values tried for n, m and k when fingerprinting, e.g. `1,2,3`.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3], allow_negative_numbers = true)]
    pub window: Vec<i64>,
    /// Nesting depth of smoothing sums inside fingerprints.
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    Distinct,
    Inconclusive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a diagram and print its canonical code.
    Parse {
        /// Gauss code, catalog name, or file containing a code.
        input: String,
    },
    /// Evaluate invariants.
    Invariant {
        input: String,
        #[command(flatten)]
        inv: InvArgs,
        #[command(flatten)]
        flat: FlatArgs,
    },
    /// Smooth one crossing against orientation.
    Smooth {
        input: String,
        /// 1 and 2 for self-crossings, 3 for crossings between components.
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=3))]
        kind: u8,
        /// Crossing id.
        #[arg(long)]
        at: u32,
    },
    /// List or apply Reidemeister moves.
    Move {
        input: String,
        /// Print every applicable move.
        #[arg(long, conflicts_with = "apply", required_unless_present = "apply")]
        list: bool,
        /// Apply a move written as `r1i:C.K:S+`, `r1d:X`, `r2i:C.K:C.K:par+`,
        /// `r2d:X,Y` or `r3:X,Y,Z`.
        #[arg(long, value_name = "SPEC")]
        apply: Option<String>,
    },
    /// Check invariants stay constant along a random move walk.
    Verify {
        input: String,
        #[command(flatten)]
        inv: InvArgs,
        #[command(flatten)]
        flat: FlatArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        /// Crossing budget for the walk; defaults to the start plus 4.
        #[arg(long)]
        max_crossings: Option<usize>,
    },
    /// Look for an invariant separating two diagrams.
    Distinguish {
        left: String,
        right: String,
        #[command(flatten)]
        inv: InvArgs,
        #[command(flatten)]
        flat: FlatArgs,
        /// Exit with status 1 unless the verdict is this one.
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Evaluate invariants on every entry of a catalog file (`-` for stdin).
    Batch {
        file: String,
        #[command(flatten)]
        inv: InvArgs,
        #[command(flatten)]
        flat: FlatArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = match input::Context::new(cli.catalog.as_deref(), cli.json) {
        Ok(c) => c,
        Err(e) => return e.report(),
    };
    let result = match cli.command {
        Command::Parse { input } => commands::parse(&ctx, &input),
        Command::Invariant { input, inv, flat } => commands::invariant(&ctx, &input, &inv, &flat),
        Command::Smooth { input, kind, at } => commands::smooth(&ctx, &input, kind, at),
        Command::Move { input, list, apply } => commands::moves(&ctx, &input, list, apply.as_deref()),
        Command::Verify { input, inv, flat, seed, steps, max_crossings } => {
            commands::verify(&ctx, &input, &inv, &flat, seed, steps, max_crossings)
        }
        Command::Distinguish { left, right, inv, flat, expect } => {
            commands::distinguish(&ctx, &left, &right, &inv, &flat, expect)
        }
        Command::Batch { file, inv, flat } => commands::batch(&ctx, &file, &inv, &flat),
    };
    match result {
        Ok(status) => status,
        Err(e) => e.report(),
    }
}
