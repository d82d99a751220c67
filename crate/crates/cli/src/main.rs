use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use resmc_cli::{commands, Format, Output};

#[derive(Parser)]
#[command(version, about = "Highly (a,m)-resistant vertex multicolorings")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal number of colors K(a,m,n) from the closed forms (a <= 1).
    Kvalue {
        #[arg(short)]
        a: usize,
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
        /// Print a JSON report.
        #[arg(long)]
        machine: bool,
    },
    /// Exhaustively check an instance file for highly (a,m)-resistance.
    Verify {
        file: PathBuf,
        #[arg(short)]
        a: usize,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        machine: bool,
    },
    /// Build an optimal realization of (1, m, n, K(1,m,n)).
    Construct {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force K(a,m,n) over every graph on at most 7 vertices.
    Oracle {
        #[arg(short)]
        a: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// Largest k tried (default max(n, 2)).
        #[arg(short, long)]
        k_max: Option<usize>,
        /// Write the realization found, as an instance file.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        machine: bool,
    },
}

fn main() -> ExitCode {
    let output: Output = match Args::parse().command {
        Command::Kvalue { a, m, n, machine } => commands::kvalue(a, m, n, machine),
        Command::Verify { file, a, m, machine } => commands::verify(&file, a, m, machine),
        Command::Construct { m, n, format, out } => {
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            };
            commands::construct(m, n, format, out.as_deref())
        }
        Command::Oracle { a, m, n, k_max, witness, machine } => {
            commands::oracle(a, m, n, k_max, witness.as_deref(), machine)
        }
    };
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(output.exit as u8)
}
