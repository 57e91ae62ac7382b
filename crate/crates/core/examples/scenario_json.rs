//! Scenario files accept regions as vertex lists or as half-space rows
//! `H x <= h`. Solutions serialize to JSON and can be re-checked later.

use reset_planner::{check_path_feasible, load_scenario, plan, PathSolution, PlanOptions};

const SCENARIO: &str = r#"{
  "start": [0, 0],
  "end": [10, 0],
  "budget": 3,
  "levels": 6,
  "polytopes": [
    {"vertices": [[2.5, -1], [3.5, -1], [3.5, 1], [2.5, 1]]},
    {"H": [[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1]], "h": [7.5, -5.5, 1, 1, 8]}
  ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scn = load_scenario(SCENARIO.as_bytes())?;
    for p in &scn.polytopes {
        println!("region {}: {} vertices, area {:.3}", p.id(), p.vertices().len(), p.area());
    }
    let out = plan(&scn, &PlanOptions::default())?;
    let json = out.solution.to_json();
    println!("{json}");

    let reloaded = PathSolution::from_json(&json)?;
    println!("reloaded solution feasible: {}", check_path_feasible(&scn, &reloaded));
    Ok(())
}
