//! More wavefront levels give the graph more candidate nodes, so the
//! graph-only path can only get shorter. The refined length stays put as
//! long as the region sequence does not change.

use reset_planner::cli::{generate_scenario, GeneratorConfig};
use reset_planner::{plan, PlanOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scn = (0..50)
        .filter_map(|seed| generate_scenario(&GeneratorConfig::default(), seed).ok())
        .find(|scn| plan(scn, &PlanOptions::default()).is_ok())
        .ok_or("no feasible scenario among the first 50 seeds")?;

    println!("{:>6} {:>7} {:>12} {:>12}  sequence", "levels", "nodes", "graph", "refined");
    for levels in [1, 2, 4, 8, 16] {
        let opts = PlanOptions {
            levels: Some(levels),
            ..PlanOptions::default()
        };
        match plan(&scn, &opts) {
            Ok(out) => println!(
                "{levels:>6} {:>7} {:>12.6} {:>12.6}  {:?}",
                out.node_count,
                out.graph_length(),
                out.solution.total_length,
                out.sequence.indices()
            ),
            Err(e) => println!("{levels:>6}  {e}"),
        }
    }
    Ok(())
}
