//! `ccl`: build, query, render and test component labelings from the shell.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "ccl", version, about = "Connected component labeling of implicit domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct BuildArgs {
    /// Maximum subdivision depth.
    #[arg(long, default_value_t = 8)]
    max_depth: u8,
    /// Tolerance as a multiple of machine epsilon times the largest root coefficient.
    #[arg(long, default_value_t = 1e3)]
    tol_scale: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a labeled tree from a polynomial JSON file and print its statistics.
    Build {
        input: PathBuf,
        #[command(flatten)]
        build: BuildArgs,
        /// Where to write the tree dump.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Label the points of a CSV file (one point per row) against a tree dump.
    Query {
        dump: PathBuf,
        points: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a 2D tree dump as SVG.
    Render {
        dump: PathBuf,
        /// Pixels per side of the sampling grid.
        #[arg(long, default_value_t = 256)]
        res: usize,
        /// Palette seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        no_tree: bool,
        #[arg(long)]
        no_shade: bool,
        #[arg(long)]
        no_contour: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a random-ensemble sweep from a JSON config and print the summary table.
    Sweep {
        config: PathBuf,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the number of instances.
        #[arg(long)]
        samples: Option<u64>,
        /// Per-instance CSV output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a labeling and compare it with the flood-fill grid oracle.
    Verify {
        input: PathBuf,
        #[command(flatten)]
        build: BuildArgs,
        /// Grid cells per axis.
        #[arg(long)]
        res: Option<usize>,
        /// Number of grid cell centers compared; 0 compares all of them.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run the singular-geometry regression corpus, or export it as polynomial files.
    Corpus {
        /// Run only this case.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = 1e3)]
        tol_scale: f64,
        /// Directory for exported polynomial files; nothing is run when given.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build { input, build, out } => commands::build(&input, build.max_depth, build.tol_scale, out.as_deref()),
        Command::Query { dump, points, out } => commands::query(&dump, &points, out.as_deref()),
        Command::Render { dump, res, seed, no_tree, no_shade, no_contour, out } => {
            let spec = render::RenderSpec::new(res, seed)
                .map_err(CliError::Input)?
                .with_overlays(!no_tree, !no_shade, !no_contour);
            commands::render(&dump, &spec, &out)
        }
        Command::Sweep { config, seed, samples, out } => commands::sweep(&config, seed, samples, out.as_deref()),
        Command::Verify { input, build, res, samples, seed } => {
            commands::verify(&input, build.max_depth, build.tol_scale, res, samples, seed)
        }
        Command::Corpus { name, tol_scale, out } => commands::corpus(name.as_deref(), tol_scale, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ccl: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
