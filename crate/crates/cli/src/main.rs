//! Command-line front end: exact distributions, image tables, named
//! verification checks and the full reproduction run.

mod common;
mod dist;
mod image;
mod repro;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use common::Format;

#[derive(Parser)]
#[command(
    name = "coxstat",
    about = "Exact length-equidistributed statistics on Coxeter groups",
    version
)]
struct Cli {
    /// Worker threads for sweeps (also honors COXSTAT_THREADS). Results
    /// are bit-identical at any thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Enumeration budget; refuses sweeps over larger groups.
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact distribution of a statistic over a group or poset.
    Dist {
        /// `A:n`/`B:n`/`D:n`, a preset (`I2:<m>`, `H3`, `F4`, `E6`, `E7`,
        /// `E8`), or a Coxeter-matrix JSON file.
        #[arg(long, conflicts_with = "poset")]
        group: Option<String>,
        /// A poset JSON file `{"ranks":[...],"bottom":i,"top":j}`.
        #[arg(long)]
        poset: Option<PathBuf>,
        /// Function file (integer JSON array) when `--stat fn` on a poset.
        #[arg(long = "fn")]
        function: Option<PathBuf>,
        /// Statistic name: `len`, `inv`, `maj`, `majstar`, `nmaj`,
        /// `nmajstar`, `fmaj`, `dmaj`, `Dmaj`, or
        /// `induced:<base>:<J>:<side>`.
        #[arg(long)]
        stat: String,
        /// Assert equidistribution with another statistic; nonzero exit on
        /// mismatch.
        #[arg(long)]
        check_against: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Per-rank image sizes and deficiency counts over a classical family.
    Image {
        /// Family letter: `A`, `B` or `D`.
        #[arg(long)]
        group: String,
        /// `sum` or `diff`.
        #[arg(long)]
        op: String,
        /// Two statistic names, e.g. `len,maj`.
        #[arg(long)]
        stats: String,
        /// Inclusive Coxeter-rank range `a..b` (family A rank `r` is the
        /// group of `(r+1)`-windows).
        #[arg(long)]
        ranks: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one named check; exit 0 exactly when it passes.
    Verify {
        #[command(subcommand)]
        check: verify::Check,
    },
    /// Run the whole reproduction suite and emit one JSON report.
    Repro {
        /// Include the heavy extended ranks (minutes of sweep time).
        #[arg(long)]
        extended: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.unwrap_or_else(coxstat::enumerate::thread_count);
    let outcome = coxstat::enumerate::run_with_threads(threads, || dispatch(&cli));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: &Cli) -> coxstat::Result<bool> {
    match &cli.command {
        Command::Dist {
            group,
            poset,
            function,
            stat,
            check_against,
            format,
        } => dist::run(&dist::DistArgs {
            group: group.clone(),
            poset: poset.clone(),
            function: function.clone(),
            stat: stat.clone(),
            check_against: check_against.clone(),
            format: *format,
            cap: cli.cap,
            out: cli.out.clone(),
        }),
        Command::Image {
            group,
            op,
            stats,
            ranks,
            format,
        } => image::run(&image::ImageArgs {
            family: group.clone(),
            op: op.clone(),
            stats: stats.clone(),
            ranks: ranks.clone(),
            format: *format,
            cap: cli.cap,
            out: cli.out.clone(),
        }),
        Command::Verify { check } => verify::run(check, cli.cap),
        Command::Repro { extended } => repro::run(*extended, &cli.out),
    }
}
