//! Plans the simplest non-trivial case: the straight segment from start to
//! end is longer than the budget, but a square sits in the middle of it.

use reset_planner::geometry::{Point, Polytope, DEFAULT_TOL};
use reset_planner::{plan, PlanOptions, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = Polytope::from_vertices(
        0,
        &[Point::new(1.5, -0.5), Point::new(2.5, -0.5), Point::new(2.5, 0.5), Point::new(1.5, 0.5)],
        DEFAULT_TOL,
    )?;
    let scn = Scenario::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), 3.0, vec![square], 4, DEFAULT_TOL)?;
    let out = plan(&scn, &PlanOptions::default())?;

    println!("sequence:    {:?}", out.sequence.indices());
    println!("graph-only:  {:.6}", out.graph_length());
    println!("refined:     {:.6}", out.solution.total_length);
    for (p, exempt) in out.solution.waypoints.windows(2).zip(&out.solution.segment_in_region) {
        let tag = if *exempt { "inside" } else { "budgeted" };
        println!("  ({:.3}, {:.3}) -> ({:.3}, {:.3})  {tag}", p[0].x, p[0].y, p[1].x, p[1].y);
    }
    Ok(())
}
