//! Checks the planner against brute force: sample every region boundary
//! densely, connect all budget-feasible pairs, and search.

use std::time::Instant;

use reset_planner::geometry::{Point, Polytope, DEFAULT_TOL};
use reset_planner::oracle::dense_oracle;
use reset_planner::{plan, PlanOptions, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tri = Polytope::from_vertices(0, &[Point::new(2.0, -1.0), Point::new(3.5, 0.5), Point::new(2.0, 1.0)], DEFAULT_TOL)?;
    let hex: Vec<Point> = (0..6)
        .map(|i| {
            let a = i as f64 * std::f64::consts::FRAC_PI_3;
            Point::new(6.0 + 0.8 * a.cos(), 1.5 + 0.8 * a.sin())
        })
        .collect();
    let hex = Polytope::from_vertices(1, &hex, DEFAULT_TOL)?;
    let scn = Scenario::new(Point::new(0.0, 0.0), Point::new(9.0, 2.0), 3.0, vec![tri, hex], 4, DEFAULT_TOL)?;

    let planned = plan(&scn, &PlanOptions::default())?;
    println!("planner: {:.6} via {:?}", planned.solution.total_length, planned.sequence.indices());
    for spacing in [0.1, 0.05, 0.02, 0.01] {
        let started = Instant::now();
        let oracle = dense_oracle(&scn, spacing)?;
        println!(
            "oracle spacing {spacing:<5} {:.6} ({} nodes, {:.0} ms)",
            oracle.length,
            oracle.node_count,
            started.elapsed().as_secs_f64() * 1e3
        );
    }
    Ok(())
}
