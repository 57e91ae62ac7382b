//! Writes a figure with the regions, the dashed straight line, the graph-only
//! path and the refined path. Usage:
//! `cargo run --example render_svg -- out.svg`

use reset_planner::cli::{generate_scenario, render_svg, GeneratorConfig};
use reset_planner::{plan, PlanOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "figure.svg".into());
    let (scn, out) = (0..50)
        .filter_map(|seed| generate_scenario(&GeneratorConfig::default(), seed).ok())
        .find_map(|scn| plan(&scn, &PlanOptions::default()).ok().map(|out| (scn, out)))
        .ok_or("no feasible scenario among the first 50 seeds")?;

    let svg = render_svg(&scn, out.graph_solution.as_ref(), Some(&out.solution));
    std::fs::write(&path, svg)?;
    println!(
        "wrote {path}: straight {:.4}, graph {:.4}, refined {:.4}",
        scn.straight_line_length(),
        out.graph_length(),
        out.solution.total_length
    );
    Ok(())
}
