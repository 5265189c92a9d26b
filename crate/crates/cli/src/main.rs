use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "gtkit", version, about = "Exact SU(n) representation theory in the Gelfand-Tsetlin basis")]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the Gelfand-Tsetlin patterns of a highest weight, with weights and squared norms.
    Patterns {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
    },
    /// Weyl dimension and pattern count.
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
    },
    /// Matrix of E_{p,q} (1-based) on the pattern basis.
    Gen {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Types of the restriction to K_S with multiplicities.
    Branch {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
        /// Root indices, e.g. "1,2"; empty for the torus.
        #[arg(long = "S", default_value = "")]
        s: String,
    },
    /// Isotypic projection p_sigma for K_S.
    Project {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
        #[arg(long = "S", default_value = "")]
        s: String,
        /// Per-block tuples, e.g. "1,0|0".
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Basis of the K_S-fixed vectors.
    Fixed {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
        #[arg(long = "S", default_value = "")]
        s: String,
    },
    /// Coefficients a_M of the fixed vector in (m,0,...,0,-m) from the recurrence.
    Eta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: i64,
        /// Also solve for the fixed vector directly and compare.
        #[arg(long)]
        direct: bool,
    },
    /// Squared inner products of the unit fixed vector with each normalised xi_{Lambda(M)}.
    Claim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: i64,
        /// Also compute the values from the directly solved vector and compare.
        #[arg(long)]
        direct: bool,
    },
    /// Check both summation identities.
    Identities {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 0)]
        p: i64,
    },
    /// Trace and norm bracket of p_sigma p_tau p_sigma on (m,0,...,0,-m) for m = 0..=m_max, as CSV.
    Decay {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m_max: i64,
        /// Defaults to the upper-left U(n-1) block.
        #[arg(long = "S")]
        s: Option<String>,
        /// Defaults to the lower-right U(n-1) block.
        #[arg(long = "T")]
        t: Option<String>,
        /// Defaults to the trivial label.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Nonzero blocks p_sigma A p_tau of an operator over the K_S-isotypic decomposition.
    Support {
        #[arg(long, allow_hyphen_values = true)]
        hw: String,
        #[arg(long = "S", default_value = "")]
        s: String,
        #[arg(long, value_enum)]
        operator: OperatorKind,
        /// Generator indices for `--operator generator`.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Subgroup and label for `--operator projection`.
        #[arg(long = "T")]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Run the acceptance suite and print one line per criterion.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Fast)]
        suite: Suite,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum OperatorKind {
    Generator,
    Projection,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Suite {
    Fast,
    Full,
}

/// Why a command did not succeed.
pub enum Failure {
    /// Bad input; exit 2.
    Usage(String),
    /// A computation or verification failed; exit 1.
    Check(String),
}

impl From<gtkit::Error> for Failure {
    fn from(e: gtkit::Error) -> Self {
        use gtkit::Error::*;
        match e {
            NotDominant(_) | Inadmissible(_) | IndexOutOfRange(_) | DimensionMismatch(_) | InvalidArgument(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let exec = if cli.sequential { gtkit::Exec::Sequential } else { gtkit::Exec::default() };
    let mut buf = Vec::new();
    let result = commands::run(&cli.command, exec, &mut buf);
    // Whatever was produced is emitted, also for failed verifications.
    let write = || -> io::Result<()> {
        match &cli.out {
            Some(path) => BufWriter::new(File::create(path)?).write_all(&buf),
            None => io::stdout().lock().write_all(&buf),
        }
    };
    if let Err(e) = write() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("failed: {msg}");
            ExitCode::from(1)
        }
    }
}
