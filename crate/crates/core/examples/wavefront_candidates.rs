//! Shows where candidate graph nodes come from: the two endpoints, region
//! vertices, and circle/boundary intersections at each budget level.

use reset_planner::cli::{generate_scenario, GeneratorConfig};
use reset_planner::wavefront::{generate_candidates, level_radii, NodeOrigin};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = GeneratorConfig {
        polytopes: 6,
        ..GeneratorConfig::default()
    };
    let scn = generate_scenario(&cfg, 4)?;
    println!("level radii: {:?}", level_radii(scn.budget, scn.levels));

    let nodes = generate_candidates(&scn);
    let mut per_level = vec![0usize; scn.levels];
    let mut vertices = 0;
    for n in &nodes {
        match n.origin {
            NodeOrigin::Wavefront { level, .. } => per_level[level - 1] += 1,
            NodeOrigin::VertexSeed => vertices += 1,
            NodeOrigin::Start | NodeOrigin::End => {}
        }
    }
    println!("{} nodes: 2 endpoints, {vertices} vertices", nodes.len());
    for (j, count) in per_level.iter().enumerate() {
        println!("  level {}: {count} intersections", j + 1);
    }
    Ok(())
}
