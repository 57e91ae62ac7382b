//! Samples random scenarios and prints one as JSON. Usage:
//! `cargo run --example generate_scenario -- [seed] [regions]`

use reset_planner::cli::{generate_scenario, GeneratorConfig};
use reset_planner::{plan, PlanError, PlanOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);
    let regions: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(15);
    let cfg = GeneratorConfig {
        polytopes: regions,
        ..GeneratorConfig::default()
    };

    let scn = generate_scenario(&cfg, seed)?;
    let status = match plan(&scn, &PlanOptions::default()) {
        Ok(out) => format!("plannable, length {:.4}", out.solution.total_length),
        Err(PlanError::Infeasible) => "infeasible".to_string(),
        Err(e) => return Err(e.into()),
    };
    eprintln!("seed {seed}: {} regions, {status}", scn.polytopes.len());
    println!("{}", scn.to_json());
    Ok(())
}
