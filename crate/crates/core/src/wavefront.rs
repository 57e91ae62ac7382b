//! Wavefront candidate generation.
//!
//! Circles of radius `j * budget / levels` (`j = 1..=levels`) are centred on a
//! fixed set of seeds (start, end, every polytope vertex) and intersected with
//! the boundary of every polytope that does not contain the seed. Seeds and
//! intersection points together form the candidate waypoint set.

use std::collections::HashMap;

use crate::geometry::{circle_boundary_intersections, Point};
use crate::scenario::Scenario;

/// Candidates closer than this are merged into the first one generated.
pub const NODE_DEDUP_RADIUS: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeOrigin {
    Start,
    End,
    VertexSeed,
    Wavefront { level: usize, seed: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CandidateNode {
    pub position: Point,
    /// Polytope whose boundary hosts the node; `None` for start and end.
    pub polytope: Option<usize>,
    pub origin: NodeOrigin,
}

/// Start, end and every polytope vertex, deduplicated within `scn.tol`.
pub fn seed_points(scn: &Scenario) -> Vec<Point> {
    let mut seeds: Vec<Point> = Vec::new();
    let candidates = [scn.start, scn.end]
        .into_iter()
        .chain(scn.polytopes.iter().flat_map(|p| p.vertices().iter().copied()));
    for p in candidates {
        if !seeds.iter().any(|q| q.distance(p) <= scn.tol) {
            seeds.push(p);
        }
    }
    seeds
}

/// Level radii `j * budget / levels`; the last one equals the budget exactly.
pub fn level_radii(budget: f64, levels: usize) -> Vec<f64> {
    (1..=levels)
        .map(|j| if j == levels { budget } else { j as f64 * budget / levels as f64 })
        .collect()
}

/// Generates the candidate node set for `scn`.
///
/// Output order is deterministic: start, end, vertex seeds (by polytope),
/// then wavefront points by level, seed index, polytope id and angle around
/// the seed.
pub fn generate_candidates(scn: &Scenario) -> Vec<CandidateNode> {
    let mut nodes = NodeSet::new(NODE_DEDUP_RADIUS);
    nodes.insert(CandidateNode {
        position: scn.start,
        polytope: None,
        origin: NodeOrigin::Start,
    });
    nodes.insert(CandidateNode {
        position: scn.end,
        polytope: None,
        origin: NodeOrigin::End,
    });
    let mut seeds: Vec<Point> = vec![scn.start, scn.end];
    for poly in &scn.polytopes {
        for &v in poly.vertices() {
            seeds.push(v);
            nodes.insert(CandidateNode {
                position: v,
                polytope: Some(poly.id()),
                origin: NodeOrigin::VertexSeed,
            });
        }
    }

    for (j, radius) in level_radii(scn.budget, scn.levels).into_iter().enumerate() {
        for (s, &seed) in seeds.iter().enumerate() {
            for poly in &scn.polytopes {
                if poly.contains(seed, scn.tol) {
                    continue;
                }
                let mut hits = circle_boundary_intersections(poly, seed, radius, scn.tol);
                hits.sort_by(|a, b| {
                    let ta = (a.y - seed.y).atan2(a.x - seed.x);
                    let tb = (b.y - seed.y).atan2(b.x - seed.x);
                    ta.total_cmp(&tb)
                });
                for position in hits {
                    nodes.insert(CandidateNode {
                        position,
                        polytope: Some(poly.id()),
                        origin: NodeOrigin::Wavefront { level: j + 1, seed: s },
                    });
                }
            }
        }
    }
    nodes.into_vec()
}

/// Insertion-ordered node list with grid-hashed proximity deduplication.
struct NodeSet {
    radius: f64,
    nodes: Vec<CandidateNode>,
    grid: HashMap<(i64, i64), Vec<usize>>,
}

impl NodeSet {
    fn new(radius: f64) -> Self {
        NodeSet {
            radius,
            nodes: Vec::new(),
            grid: HashMap::new(),
        }
    }

    fn cell(&self, p: Point) -> (i64, i64) {
        ((p.x / self.radius).floor() as i64, (p.y / self.radius).floor() as i64)
    }

    fn insert(&mut self, node: CandidateNode) -> bool {
        let (cx, cy) = self.cell(node.position);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(bucket) = self.grid.get(&(cx + dx, cy + dy)) {
                    if bucket
                        .iter()
                        .any(|&i| self.nodes[i].position.distance(node.position) <= self.radius)
                    {
                        return false;
                    }
                }
            }
        }
        self.grid.entry((cx, cy)).or_default().push(self.nodes.len());
        self.nodes.push(node);
        true
    }

    fn into_vec(self) -> Vec<CandidateNode> {
        self.nodes
    }
}
