//! Solves the refinement program directly for a fixed region sequence. The
//! budget is just too short to go straight over the square, so the optimal
//! entry and exit points bend the path up to it.

use reset_planner::geometry::{Point, Polytope, DEFAULT_TOL};
use reset_planner::refine::{assemble_problem, assemble_solution, solve, SolverSettings};
use reset_planner::{check_path_feasible, PolytopeSequence, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = Polytope::from_vertices(
        0,
        &[Point::new(2.0, 1.0), Point::new(4.0, 1.0), Point::new(4.0, 2.0), Point::new(2.0, 2.0)],
        DEFAULT_TOL,
    )?;
    let scn = Scenario::new(Point::new(0.0, 0.0), Point::new(6.0, 0.0), 3.1, vec![square], 4, DEFAULT_TOL)?;
    let seq = PolytopeSequence::new(vec![0]);

    let problem = assemble_problem(&scn, &seq)?;
    println!(
        "{} point variables, {} linear rows, {} hop bounds",
        problem.variable_count(),
        problem.linear_row_count(),
        problem.hop_constraints.len()
    );
    let result = solve(&problem, None, &SolverSettings::default())?;
    let (a, b) = (result.entry_points()[0], result.exit_points()[0]);
    println!("entry ({:.6}, {:.6}), exit ({:.6}, {:.6})", a.x, a.y, b.x, b.y);
    println!("length {:.9} after {} Newton steps", result.objective_value, result.solver_iterations);

    let x = (3.1f64 * 3.1 - 1.0).sqrt();
    println!("closed form {:.9}", 6.2 + 6.0 - 2.0 * x);
    let sol = assemble_solution(&scn, &seq, &result);
    println!("feasible: {}", check_path_feasible(&scn, &sol));
    Ok(())
}
