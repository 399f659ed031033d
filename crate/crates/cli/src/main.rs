use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quadric_k0::field::{FieldDescriptor, PrimeField};
use quadric_k0::geometry::real_geometry;
use quadric_k0::report::{compute_line, table_text, TableKind};
use quadric_k0::verify::{run_verification_with, VerifyConfig, DEFAULT_MAX_RANK, DEFAULT_PRIMES};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

/// Reduced K_0 of the quadric rings k[x,y]/(Σx² − Σy² − 1).
#[derive(Parser)]
#[command(name = "quadric-k0", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// K̃₀ of R_{n,m} with the Clifford data behind it.
    Compute {
        #[arg(long)]
        plus: usize,
        #[arg(long)]
        minus: usize,
        /// level-1, level-2, level-inf, Fp:<p> or Q
        #[arg(long)]
        field: FieldDescriptor,
    },
    /// Clifford algebras and simple-module dimensions by row.
    Table {
        #[arg(long)]
        field: FieldDescriptor,
        /// definite-plus, definite-minus, paper-8r or paper-4r
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// Check the label calculus against brute-force classification over F_p.
    Verify {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PRIMES)]
        primes: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: usize,
        /// Also check the explicit isomorphisms over Q and each prime.
        #[arg(long)]
        witnesses: bool,
    },
    /// Euler class group and CH_0 of R[x,y]/(Q_{n,m} − 1).
    RealGeometry {
        #[arg(long)]
        plus: usize,
        #[arg(long)]
        minus: usize,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(cli.command, &mut out);
    let _ = out.flush();
    code
}

fn run(command: Command, out: &mut impl Write) -> ExitCode {
    match command {
        Command::Compute { plus, minus, field } => match compute_line(plus, minus, &field) {
            Ok(line) => {
                let _ = writeln!(out, "{line}");
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Table { field, kind, max_n, r } => {
            let kind: TableKind = match kind.parse() {
                Ok(k) => k,
                Err(e) => return usage_error(e),
            };
            match table_text(field.profile(), kind, max_n, r) {
                Ok(text) => {
                    let _ = write!(out, "{text}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Verify {
            primes,
            max_rank,
            witnesses,
        } => {
            let primes = match primes.into_iter().map(PrimeField::new).collect::<Result<Vec<_>, _>>() {
                Ok(p) => p,
                Err(e) => return usage_error(e),
            };
            let config = VerifyConfig {
                primes,
                max_rank,
                witnesses,
            };
            let summary = match run_verification_with(&config, |record| {
                let _ = writeln!(out, "{record}");
            }) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            for (line, _) in &summary.witnesses {
                let _ = writeln!(out, "{line}");
            }
            let _ = writeln!(out, "{}", summary.summary_line());
            if summary.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Command::RealGeometry { plus, minus } => match real_geometry(plus, minus) {
            Ok(report) => {
                let _ = writeln!(out, "{report}");
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
    }
}
