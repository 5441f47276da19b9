//! Command-line front end for `charone-core`: the `.sr` table format, JSON
//! reports, the bundled corpus and the subcommands.

pub mod commands;
pub mod corpus;
pub mod format;
pub mod report;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Parser, Subcommand};

use commands::CongruenceFilter;

#[derive(Debug, Parser)]
#[command(name = "charone", version, about = "Exact computations in idempotent semirings")]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the semiring axioms and report simplicity and unit generation.
    Validate { file: String },
    /// Enumerate valuation orders.
    Orders {
        file: String,
        /// Also list the degenerate orders (1 ⪯ 0).
        #[arg(long)]
        degenerate: bool,
    },
    /// List congruences, optionally filtered.
    #[command(group(ArgGroup::new("filter").args(["prime", "qc", "radical"])))]
    Congruences {
        file: String,
        #[arg(long)]
        prime: bool,
        #[arg(long)]
        qc: bool,
        #[arg(long)]
        radical: bool,
    },
    /// Quotient by the intersection of the prime congruences.
    Reduce { file: String },
    /// Quasiintegral closure of a subsemiring, with witnesses.
    Closure {
        file: String,
        /// Comma-separated element names.
        #[arg(long)]
        sub: String,
    },
    /// Contraction over a subsemiring.
    Contract {
        file: String,
        #[arg(long)]
        sub: String,
    },
    /// Decide whether `v(y) < v(x)` for all given pairs at once.
    Admissible {
        file: String,
        /// Pairs as `x>y,...`.
        #[arg(long)]
        pairs: String,
    },
    /// Extend the p-adic valuation to Q(sqrt(d)) and verify the result.
    Extend {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// List the bundled tables.
    Corpus,
    /// Run the fixed suite and print all reports as JSON.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs one command and returns the exit code: 0 on success, 1 on a
/// verification failure, 2 on an input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::Orders { file, degenerate } => commands::orders(file, *degenerate),
        Command::Congruences { file, prime, qc, radical } => {
            let filter = match (prime, qc, radical) {
                (true, _, _) => CongruenceFilter::Prime,
                (_, true, _) => CongruenceFilter::Qc,
                (_, _, true) => CongruenceFilter::Radical,
                _ => CongruenceFilter::All,
            };
            commands::list_congruences(file, filter)
        }
        Command::Reduce { file } => commands::reduce(file),
        Command::Closure { file, sub } => commands::closure(file, sub),
        Command::Contract { file, sub } => commands::contract(file, sub),
        Command::Admissible { file, pairs } => commands::admissible(file, pairs),
        Command::Extend { p, d } => commands::extend(*p, *d),
        Command::Corpus => commands::corpus(),
        Command::Suite { seed } => {
            let _ = out.write_all(suite::to_json(&suite::run(*seed)).as_bytes());
            return 0;
        }
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(commands::render(&o, cli.json).as_bytes());
            i32::from(o.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
