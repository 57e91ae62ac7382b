//! Brute-force reference solution.
//!
//! Every polytope boundary is sampled at a fixed arc-length spacing (plus its
//! vertices), and the same budget edge rule as the planner's graph is applied
//! to every pair of samples. Edges are evaluated on the fly, so memory stays
//! linear in the node count. The result is an upper bound on the true optimum
//! that tightens as the spacing shrinks. Halving the spacing yields a
//! superset of nodes, so the length never increases.

use thiserror::Error;

use crate::budget_graph::{dijkstra, edge_rule, GraphPath, WeightedGraph};
use crate::geometry::Point;
use crate::scenario::Scenario;

pub const DEFAULT_MAX_NODES: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("spacing must be positive and finite, got {0}")]
    BadSpacing(f64),
    #[error("oracle would need {needed} nodes, limit is {limit}")]
    TooManyNodes { needed: usize, limit: usize },
    #[error("infeasible: no budget-feasible path")]
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub length: f64,
    pub path: GraphPath,
    pub node_count: usize,
}

struct SampledGraph {
    points: Vec<Point>,
    regions: Vec<Option<usize>>,
    budget: f64,
    tol: f64,
}

impl WeightedGraph for SampledGraph {
    fn node_count(&self) -> usize {
        self.points.len()
    }

    fn for_each_neighbor<F: FnMut(usize, f64)>(&self, node: usize, mut visit: F) {
        let p = self.points[node];
        let r = self.regions[node];
        for (v, (&q, &rq)) in self.points.iter().zip(&self.regions).enumerate() {
            let d = p.distance(q);
            if d > 0.0 && edge_rule(d, r, rq, self.budget, self.tol).is_some() {
                visit(v, d);
            }
        }
    }
}

/// Boundary samples of one polytope: vertices, then points at `i * spacing`
/// of arc length from vertex 0, counter-clockwise.
fn boundary_samples(poly: &crate::geometry::Polytope, spacing: f64) -> Vec<Point> {
    let perimeter = poly.perimeter();
    let count = (perimeter / spacing).ceil() as usize;
    let mut out: Vec<Point> = poly.vertices().to_vec();
    out.extend(
        (0..count)
            .map(|i| i as f64 * spacing)
            .filter(|&s| s < perimeter)
            .map(|s| poly.point_at_arc_length(s)),
    );
    out
}

pub fn dense_oracle(scn: &Scenario, spacing: f64) -> Result<OracleResult, OracleError> {
    dense_oracle_with_limit(scn, spacing, DEFAULT_MAX_NODES)
}

pub fn dense_oracle_with_limit(scn: &Scenario, spacing: f64, max_nodes: usize) -> Result<OracleResult, OracleError> {
    if !spacing.is_finite() || spacing <= 0.0 {
        return Err(OracleError::BadSpacing(spacing));
    }
    let needed: usize = 2 + scn
        .polytopes
        .iter()
        .map(|p| p.vertices().len() + (p.perimeter() / spacing).ceil() as usize)
        .sum::<usize>();
    if needed > max_nodes {
        return Err(OracleError::TooManyNodes {
            needed,
            limit: max_nodes,
        });
    }

    let mut points = vec![scn.start, scn.end];
    let mut regions = vec![scn.region_of(scn.start), scn.region_of(scn.end)];
    for poly in &scn.polytopes {
        let samples = boundary_samples(poly, spacing);
        regions.extend(std::iter::repeat_n(Some(poly.id()), samples.len()));
        points.extend(samples);
    }
    let graph = SampledGraph {
        points,
        regions,
        budget: scn.budget,
        tol: scn.tol,
    };
    let target = if scn.start == scn.end { 0 } else { 1 };
    let (nodes, length) = dijkstra(&graph, 0, target).ok_or(OracleError::Infeasible)?;
    let path = GraphPath {
        waypoints: nodes.iter().map(|&i| graph.points[i]).collect(),
        regions: nodes.iter().map(|&i| graph.regions[i]).collect(),
        node_ids: nodes,
        length,
    };
    Ok(OracleResult {
        length,
        path,
        node_count: graph.points.len(),
    })
}
