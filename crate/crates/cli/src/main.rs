use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use singlink_cli::commands;
use singlink_cli::{CliError, Format, Options, Outcome};

/// Invariants of plumbed surface-singularity links.
#[derive(Debug, Parser)]
#[command(name = "singlink", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Human-readable table output.
    #[arg(long, global = true)]
    table: bool,
    /// Largest coefficient the fundamental cycle search may reach.
    #[arg(long, global = true, default_value_t = singlink::cycle::DEFAULT_COEFF_CAP)]
    coeff_cap: i64,
    /// Depth of the breadth-first search behind `move auto`.
    #[arg(long, global = true, default_value_t = singlink::mcg::DEFAULT_REWRITE_DEPTH)]
    rewrite_depth: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for one graph file.
    Invariants { path: PathBuf },
    /// Fundamental cycle and rationality certificate.
    Cycle { path: PathBuf },
    /// Milnor open book of a cycle `m` (comma list) or of the fundamental cycle.
    Openbook {
        path: PathBuf,
        #[arg(long, default_value = "min")]
        m: String,
    },
    /// Planar / elliptic / higher support genus.
    Classify { path: PathBuf },
    /// Canonical Legendrian surgery diagram with its adjunction certificate.
    Diagram { path: PathBuf },
    /// Dehn twist word tools.
    Mcg {
        #[command(subcommand)]
        command: McgCommand,
    },
    /// One report per file of a directory, in file name order.
    Batch {
        dir: PathBuf,
        /// Worker threads; 1 evaluates sequentially.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum McgCommand {
    /// Check a derivation script step by step.
    Verify { script: PathBuf },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = if cli.table {
        Format::Table
    } else {
        Format::Json
    };
    let opts = Options {
        coeff_cap: cli.coeff_cap,
        rewrite_depth: cli.rewrite_depth,
    };
    match &cli.command {
        Command::Invariants { path } => commands::invariants(path, format, &opts),
        Command::Cycle { path } => commands::cycle(path, format, &opts),
        Command::Openbook { path, m } => commands::openbook(path, m, format, &opts),
        Command::Classify { path } => commands::classify(path, format, &opts),
        Command::Diagram { path } => commands::diagram(path, format),
        Command::Mcg {
            command: McgCommand::Verify { script },
        } => commands::mcg_verify(script, format, &opts),
        Command::Batch { dir, jobs } => commands::batch(dir, format, &opts, *jobs),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
