//! `tensorframe` — command-line front end of the frame-theory workbench.
//!
//! Exit codes: 0 success, 1 input error, 2 mathematical failure (not a
//! frame / not a resolution / residual above tolerance).

mod commands;
mod document;
mod report;
mod suites;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{CliError, CommandOutput, GenKind, GenParams, EXIT_INPUT};
use report::OutputFormat;
use suites::Suite;

const DEFAULT_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "tensorframe",
    version,
    about = "Numerical workbench for frames: module frames, tensor products, fusion frames, resolutions of the identity, group frame representations"
)]
struct Cli {
    /// Tolerance for acceptance checks (falls back to TENSORFRAME_TOL, then 1e-8).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value = "text")]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the optimal frame bounds of a frame document.
    CheckFrame {
        path: PathBuf,
        /// Require a module document (algebra section present).
        #[arg(long)]
        module: bool,
        /// Require a plain Hilbert-space document (algebra absent or trivial).
        #[arg(long)]
        hilbert: bool,
    },
    /// Tensor two frame (or fusion) documents and write the product document.
    Tensor {
        path_a: PathBuf,
        path_b: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the optimal bounds of a fusion-frame document.
    FusionCheck { path: PathBuf },
    /// Check an operator family for the resolution-of-identity conditions.
    ResolutionCheck { path: PathBuf },
    /// Verify a group representation document and its frame-vector candidates.
    GroupFrame { path: PathBuf },
    /// Run randomized verification suites (optionally over given documents).
    Verify {
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        trials: usize,
    },
    /// Generate a reproducible random document that passes its check command.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
        /// Comma-separated C*-algebra block sizes, e.g. "2,1" (frame kind only).
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn resolve_tol(flag: Option<f64>) -> f64 {
    flag.or_else(|| {
        std::env::var("TENSORFRAME_TOL")
            .ok()
            .and_then(|text| text.parse::<f64>().ok())
    })
    .unwrap_or(DEFAULT_TOL)
}

fn run(cli: &Cli, tol: f64) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::CheckFrame { path, module, hilbert } => {
            commands::check_frame(path, tol, *module, *hilbert)
        }
        Command::Tensor { path_a, path_b, out } => commands::tensor(path_a, path_b, out, tol),
        Command::FusionCheck { path } => commands::fusion_check(path, tol),
        Command::ResolutionCheck { path } => commands::resolution_check(path, tol),
        Command::GroupFrame { path } => commands::group_frame(path, tol),
        Command::Verify { paths, suite, seed, trials } => {
            suites::verify(paths, *suite, *seed, *trials, tol)
        }
        Command::Gen { kind, dim, count, algebra, seed, out } => {
            let params = GenParams {
                kind: *kind,
                dim: *dim,
                count: *count,
                algebra: algebra.clone(),
                seed: *seed,
                out: out.clone(),
            };
            let (doc, written) = commands::gen(&params)?;
            let mut report = report::Report::new("gen");
            if written.is_none() {
                // No output path: the document itself is the report.
                print!("{}", doc.to_json());
                std::process::exit(commands::EXIT_OK);
            }
            report.push_result("out", serde_json::json!(written.unwrap().display().to_string()));
            report.push_result("seed", serde_json::json!(params.seed));
            Ok(CommandOutput { report, exit: commands::EXIT_OK })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let tol = resolve_tol(cli.tol);
    let start = Instant::now();
    match run(&cli, tol) {
        Ok(CommandOutput { mut report, exit }) => {
            report.wall_ms = start.elapsed().as_millis();
            print!("{}", report.render(cli.output));
            std::process::exit(exit);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(EXIT_INPUT);
        }
    }
}
