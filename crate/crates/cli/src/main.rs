//! `tiltlab`: silting enumeration, tilting checks and theorem verifiers.

mod commands;
mod markdown;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{cmd_check, cmd_enumerate, cmd_verify, MethodArg, Outcome, RunConfig, Target, Theorem};

#[derive(Parser)]
#[command(name = "tiltlab", version, about = "Silting complexes and AIR tilting over bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args)]
struct Common {
    /// Algebra spec (JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Window size; overrides the spec.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value = "mutation")]
    method: MethodArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Resolution depth for Ext computations (default 2d+3).
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, default_value_t = 3)]
    universe_dim_bound: usize,
    #[arg(long, default_value_t = tiltlab::silting::enumerate::DEFAULT_MAX_CLASSES)]
    max_classes: usize,
    /// Random trials per closure property and generator set.
    #[arg(long, default_value_t = 500)]
    trials: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the basic silting complexes in K^{[-d,0]}(proj A).
    Enumerate(Common),
    /// Test the objects in a file for AIR tilting, quasi-tilting or tilting.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        target: Target,
        /// JSON list of complexes.
        #[arg(long)]
        object: PathBuf,
    },
    /// Verify a theorem over the enumerated classes and a sample universe.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
}

fn config(c: &Common) -> RunConfig {
    RunConfig {
        spec: c.spec.clone(),
        d: c.d,
        method: c.method,
        seed: c.seed,
        depth: c.depth,
        universe_dim_bound: c.universe_dim_bound,
        max_classes: c.max_classes,
        trials: c.trials,
    }
}

fn emit(c: &Common, title: &str, outcome: &Outcome) -> std::io::Result<()> {
    let text = match c.format {
        Format::Json => serde_json::to_string_pretty(&outcome.report).expect("report serializes") + "\n",
        Format::Markdown => markdown::render(title, &outcome.report),
    };
    match &c.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("TILTLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (common, title, outcome) = match &cli.command {
        Command::Enumerate(c) => (c, "enumerate", cmd_enumerate(&config(c))),
        Command::Check { common, target, object } => (common, "check", cmd_check(&config(common), *target, object)),
        Command::Verify { common, theorem } => (common, "verify", cmd_verify(&config(common), *theorem)),
    };
    if let Err(e) = emit(common, title, &outcome) {
        eprintln!("tiltlab: cannot write report: {e}");
        return ExitCode::from(commands::EXIT_INPUT as u8);
    }
    if let Some(err) = outcome.report.get("error") {
        eprintln!("tiltlab: {}", err.as_str().unwrap_or_default());
    }
    ExitCode::from(outcome.code as u8)
}
