use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reset_planner::cli::{self, CliError, GeneratorConfig, PlanFlags, TableFormat};

#[derive(Parser)]
#[command(name = "reset-planner", version, about = "Shortest paths under a travel budget that resets inside convex regions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Override the scenario's wavefront level count.
    #[arg(long)]
    levels: Option<usize>,
    /// Override the scenario's geometric tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Feasibility tolerance of the refinement solver.
    #[arg(long, default_value_t = 1e-7)]
    feastol: f64,
    /// Newton step limit of the refinement solver.
    #[arg(long, default_value_t = 50_000)]
    max_iter: usize,
    /// Write the budget graph as JSON.
    #[arg(long)]
    dump_graph: Option<PathBuf>,
    /// Boundary sample spacing for `verify`.
    #[arg(long, default_value_t = 0.01)]
    oracle_spacing: f64,
    /// Write the solution here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Also render an SVG figure.
    #[arg(long)]
    svg: Option<PathBuf>,
}

impl CommonFlags {
    fn into_flags(self) -> PlanFlags {
        PlanFlags {
            levels: self.levels,
            tol: self.tol,
            feastol: self.feastol,
            max_iter: self.max_iter,
            dump_graph: self.dump_graph,
            oracle_spacing: self.oracle_spacing,
            output: self.output,
            svg: self.svg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Plan a scenario and print the solution JSON.
    Plan {
        scenario: PathBuf,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Plan with several level counts and print a table.
    Compare {
        scenario: PathBuf,
        /// Comma-separated level counts.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        deltas: Vec<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Render a scenario and solution as SVG.
    Render {
        scenario: PathBuf,
        solution: PathBuf,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Generate a random scenario.
    Generate {
        #[arg(long, short = 'm', default_value_t = 15)]
        polytopes: usize,
        /// x0,y0,x1,y1; start and end are the two corners.
        #[arg(long, default_value = "0,0,18,14")]
        bounds: String,
        #[arg(long, short = 'q', default_value_t = 3.0)]
        budget: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
    /// Compare the planner against the dense-sampling oracle.
    Verify {
        scenario: PathBuf,
        #[command(flatten)]
        flags: CommonFlags,
    },
}

fn run(command: Command) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    match command {
        Command::Plan { scenario, flags } => cli::cmd_plan(&scenario, &flags.into_flags(), &mut out, &mut err).map(drop),
        Command::Compare {
            scenario,
            deltas,
            format,
            flags,
        } => {
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Markdown => TableFormat::Markdown,
            };
            cli::cmd_compare(&scenario, &deltas, format, &flags.into_flags(), &mut out).map(drop)
        }
        Command::Render { scenario, solution, output } => cli::cmd_render(&scenario, &solution, &output),
        Command::Generate {
            polytopes,
            bounds,
            budget,
            seed,
            levels,
        } => {
            let (min, max) = cli::parse_bounds(&bounds)?;
            let cfg = GeneratorConfig {
                polytopes,
                min,
                max,
                budget,
                levels,
                ..GeneratorConfig::default()
            };
            cli::cmd_generate(&cfg, seed, &mut out)
        }
        Command::Verify { scenario, flags } => cli::cmd_verify(&scenario, &flags.into_flags(), &mut out).map(drop),
    }
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(p) => p,
        Err(e) => {
            let _ = e.print();
            // Usage errors share the input-error exit code.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(parsed.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
