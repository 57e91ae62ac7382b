//! Command implementations behind the `reset-planner` binary. Each command
//! writes its primary output to `out` and diagnostics to `err`, and maps
//! failures onto the process exit codes in [`CliError::exit_code`].

pub mod generate;
pub mod render;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use thiserror::Error;

use crate::geometry::Point;
use crate::oracle::{dense_oracle, OracleError};
use crate::planner::{plan, plan_graph, PlanError, PlanOptions, PlanOutcome};
use crate::refine::SolverSettings;
use crate::scenario::{Method, PathSolution, Scenario};

pub use generate::{generate_scenario, GenerateError, GeneratorConfig};
pub use render::render_svg;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("infeasible: no budget-feasible path")]
    Infeasible,
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } | CliError::Io(_) => 1,
            CliError::Infeasible => 2,
            CliError::Solver(_) => 3,
        }
    }
}

impl From<PlanError> for CliError {
    fn from(e: PlanError) -> Self {
        match e {
            PlanError::Infeasible => CliError::Infeasible,
            other => CliError::Solver(other.to_string()),
        }
    }
}

/// Options shared by `plan`, `compare` and `verify`.
#[derive(Clone, Debug)]
pub struct PlanFlags {
    pub levels: Option<usize>,
    pub tol: Option<f64>,
    pub feastol: f64,
    pub max_iter: usize,
    pub dump_graph: Option<PathBuf>,
    pub oracle_spacing: f64,
    pub output: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl Default for PlanFlags {
    fn default() -> Self {
        let solver = SolverSettings::default();
        PlanFlags {
            levels: None,
            tol: None,
            feastol: solver.feastol,
            max_iter: solver.max_iter,
            dump_graph: None,
            oracle_spacing: 0.01,
            output: None,
            svg: None,
        }
    }
}

impl PlanFlags {
    fn options(&self) -> PlanOptions {
        PlanOptions {
            levels: self.levels,
            solver: SolverSettings {
                feastol: self.feastol,
                max_iter: self.max_iter,
                ..SolverSettings::default()
            },
            keep_graph: self.dump_graph.is_some(),
        }
    }
}

fn input_error(path: &Path, message: impl ToString) -> CliError {
    CliError::Input {
        path: path.to_path_buf(),
        message: message.to_string(),
    }
}

/// Reads and validates a scenario file, optionally overriding its `tol`.
pub fn read_scenario(path: &Path, tol: Option<f64>) -> Result<Scenario, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input_error(path, e))?;
    let text = match tol {
        None => text,
        Some(tol) => {
            let mut value: serde_json::Value = serde_json::from_str(&text).map_err(|e| input_error(path, e))?;
            let obj = value
                .as_object_mut()
                .ok_or_else(|| input_error(path, "scenario must be a JSON object"))?;
            obj.insert("tol".into(), serde_json::json!(tol));
            value.to_string()
        }
    };
    Scenario::from_json(&text).map_err(|e| input_error(path, e))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(CliError::Io)
}

/// Plans one scenario; the solution JSON goes to `--output` or `out`.
pub fn cmd_plan(scenario_path: &Path, flags: &PlanFlags, out: &mut dyn Write, err: &mut dyn Write) -> Result<PlanOutcome, CliError> {
    let scn = read_scenario(scenario_path, flags.tol)?;
    for note in scn.notes() {
        writeln!(err, "note: {note}")?;
    }
    let outcome = plan(&scn, &flags.options())?;
    if let (Some(path), Some(graph)) = (&flags.dump_graph, &outcome.graph) {
        write_text(path, &graph.to_json())?;
    }
    let json = outcome.solution.to_json();
    match &flags.output {
        Some(path) => write_text(path, &json)?,
        None => writeln!(out, "{json}")?,
    }
    if let Some(path) = &flags.svg {
        let svg = render_svg(&scn, outcome.graph_solution.as_ref(), Some(&outcome.solution));
        write_text(path, &svg)?;
    }
    writeln!(err, "nodes: {} edges: {}", outcome.node_count, outcome.edge_count)?;
    writeln!(err, "sequence: {:?}", outcome.sequence.indices())?;
    writeln!(err, "graph-only length: {:.9}", outcome.graph_length())?;
    match outcome.solution.method {
        Method::StraightLine => writeln!(err, "straight-line length: {:.9}", outcome.solution.total_length)?,
        _ => writeln!(err, "refined length: {:.9}", outcome.solution.total_length)?,
    }
    Ok(outcome)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareRow {
    pub levels: usize,
    pub nodes: usize,
    pub graph_length: f64,
    pub refined_length: f64,
    pub millis: f64,
    pub sequence: Vec<usize>,
}

/// Plans the scenario once per level count and tabulates the results.
pub fn cmd_compare(
    scenario_path: &Path,
    levels: &[usize],
    format: TableFormat,
    flags: &PlanFlags,
    out: &mut dyn Write,
) -> Result<Vec<CompareRow>, CliError> {
    if levels.is_empty() {
        return Err(CliError::Usage("compare needs at least one level count".into()));
    }
    if levels.contains(&0) {
        return Err(CliError::Usage("level counts must be at least 1".into()));
    }
    let scn = read_scenario(scenario_path, flags.tol)?;
    let mut rows = Vec::with_capacity(levels.len());
    for &delta in levels {
        let opts = PlanOptions {
            levels: Some(delta),
            ..flags.options()
        };
        let started = Instant::now();
        let outcome = plan(&scn, &opts)?;
        let millis = started.elapsed().as_secs_f64() * 1e3;
        rows.push(CompareRow {
            levels: delta,
            nodes: outcome.node_count,
            graph_length: outcome.graph_length(),
            refined_length: outcome.solution.total_length,
            millis,
            sequence: outcome.sequence.indices().to_vec(),
        });
    }
    match format {
        TableFormat::Csv => {
            writeln!(out, "delta,nodes,graph_len,refined_len,ms")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{:.9},{:.9},{:.3}",
                    r.levels, r.nodes, r.graph_length, r.refined_length, r.millis
                )?;
            }
        }
        TableFormat::Markdown => {
            writeln!(out, "| delta | nodes | graph_len | refined_len | ms |")?;
            writeln!(out, "|---:|---:|---:|---:|---:|")?;
            for r in &rows {
                writeln!(
                    out,
                    "| {} | {} | {:.9} | {:.9} | {:.3} |",
                    r.levels, r.nodes, r.graph_length, r.refined_length, r.millis
                )?;
            }
        }
    }
    Ok(rows)
}

/// Writes an SVG of a scenario and a solution file. For refined solutions the
/// graph-only path is recomputed from the scenario and drawn underneath.
pub fn cmd_render(scenario_path: &Path, solution_path: &Path, output: &Path) -> Result<(), CliError> {
    let scn = read_scenario(scenario_path, None)?;
    let text = fs::read_to_string(solution_path).map_err(|e| input_error(solution_path, e))?;
    let sol = PathSolution::from_json(&text).map_err(|e| input_error(solution_path, e))?;
    let svg = match sol.method {
        Method::GraphOnly => render_svg(&scn, Some(&sol), None),
        Method::StraightLine => render_svg(&scn, None, Some(&sol)),
        Method::Refined => {
            let graph = plan_graph(&scn, None).ok().map(|(g, _, _)| g);
            render_svg(&scn, graph.as_ref(), Some(&sol))
        }
    };
    write_text(output, &svg)
}

/// Samples a random scenario and writes its JSON.
pub fn cmd_generate(cfg: &GeneratorConfig, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let scn = generate_scenario(cfg, seed).map_err(|e| match e {
        GenerateError::BadConfig(m) => CliError::Usage(m),
        other => CliError::Solver(other.to_string()),
    })?;
    writeln!(out, "{}", scn.to_json())?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub planned: f64,
    pub oracle: f64,
    pub oracle_nodes: usize,
    pub same_sequence: bool,
}

/// Compares the planner against the dense-sampling oracle.
pub fn cmd_verify(scenario_path: &Path, flags: &PlanFlags, out: &mut dyn Write) -> Result<VerifyReport, CliError> {
    let scn = read_scenario(scenario_path, flags.tol)?;
    let outcome = plan(&scn, &flags.options())?;
    let oracle = dense_oracle(&scn, flags.oracle_spacing).map_err(|e| match e {
        OracleError::Infeasible => CliError::Infeasible,
        other => CliError::Usage(other.to_string()),
    })?;
    let oracle_sequence = crate::budget_graph::extract_sequence(&oracle.path)
        .map(|x| x.sequence)
        .ok();
    let report = VerifyReport {
        planned: outcome.solution.total_length,
        oracle: oracle.length,
        oracle_nodes: oracle.node_count,
        same_sequence: oracle_sequence.as_ref() == Some(&outcome.sequence),
    };
    writeln!(out, "planned length: {:.9}", report.planned)?;
    writeln!(out, "oracle length:  {:.9} ({} nodes, spacing {})", report.oracle, report.oracle_nodes, flags.oracle_spacing)?;
    writeln!(out, "difference:     {:.3e}", report.oracle - report.planned)?;
    writeln!(out, "same sequence:  {}", report.same_sequence)?;
    Ok(report)
}

/// Parses `x0,y0,x1,y1`.
pub fn parse_bounds(text: &str) -> Result<(Point, Point), CliError> {
    let vals: Result<Vec<f64>, _> = text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    match vals.as_deref() {
        Ok([x0, y0, x1, y1]) if x0 < x1 && y0 < y1 => Ok((Point::new(*x0, *y0), Point::new(*x1, *y1))),
        _ => Err(CliError::Usage(format!("bounds must be x0,y0,x1,y1 with x0<x1 and y0<y1, got {text:?}"))),
    }
}
