//! Runs the graph stage by hand: build the budget graph over wavefront
//! candidates, search it, and read off the visited regions.

use reset_planner::budget_graph::{build_graph, extract_sequence, shortest_graph_path};
use reset_planner::cli::{generate_scenario, GeneratorConfig};
use reset_planner::wavefront::generate_candidates;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scn = (0..50)
        .filter_map(|seed| generate_scenario(&GeneratorConfig::default(), seed).ok())
        .find(|scn| reset_planner::plan(scn, &Default::default()).is_ok())
        .ok_or("no feasible scenario among the first 50 seeds")?;

    let graph = build_graph(&scn, generate_candidates(&scn));
    println!("{} nodes, {} edges", graph.nodes().len(), graph.edge_count());

    // Node 0 is the start and node 1 the end.
    let path = shortest_graph_path(&graph, 0, 1)?;
    let seq = extract_sequence(&path)?;
    println!("path length {:.4} over {} nodes", path.length, path.node_ids.len());
    println!("visits regions {:?}", seq.sequence.indices());
    for (i, (a, b)) in seq.entries.iter().zip(&seq.exits).enumerate() {
        println!("  region {}: enter ({:.3}, {:.3}) leave ({:.3}, {:.3})", seq.sequence.indices()[i], a.x, a.y, b.x, b.y);
    }
    Ok(())
}
