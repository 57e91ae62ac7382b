//! Resource-constrained graph over candidate waypoints.
//!
//! Two nodes are joined when their distance fits the budget, or when both lie
//! in the same polytope (travel inside a replenishment region is free of the
//! budget). Shortest paths come from Dijkstra with a deterministic tie rule:
//! smaller total length, then fewer hops, then the smaller predecessor index.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point;
use crate::scenario::{Method, PathSolution, Scenario};
use crate::wavefront::CandidateNode;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("infeasible: no budget-feasible path")]
    Infeasible,
    #[error("polytope {polytope} is visited twice along the path")]
    SequenceRepetition { polytope: usize },
}

/// Ordered, repetition-free list of visited polytope indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolytopeSequence(Vec<usize>);

impl PolytopeSequence {
    pub fn new(indices: Vec<usize>) -> Self {
        PolytopeSequence(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub to: usize,
    pub weight: f64,
    /// Both endpoints lie in the same polytope.
    pub exempt: bool,
}

/// Anything Dijkstra can walk. Weights must be positive.
pub trait WeightedGraph {
    fn node_count(&self) -> usize;
    fn for_each_neighbor<F: FnMut(usize, f64)>(&self, node: usize, visit: F);
}

#[derive(Clone, Debug)]
pub struct BudgetGraph {
    nodes: Vec<CandidateNode>,
    regions: Vec<Option<usize>>,
    adjacency: Vec<Vec<Edge>>,
}

impl BudgetGraph {
    pub fn nodes(&self) -> &[CandidateNode] {
        &self.nodes
    }

    /// Polytope containing each node, if any.
    pub fn regions(&self) -> &[Option<usize>] {
        &self.regions
    }

    pub fn neighbors(&self, node: usize) -> &[Edge] {
        &self.adjacency[node]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Debug dump: `{"nodes":[[x,y],...],"edges":[[u,v,w,exempt],...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump {
            nodes: Vec<Point>,
            edges: Vec<(usize, usize, f64, bool)>,
        }
        let edges = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| {
                list.iter()
                    .filter(move |e| e.to > u)
                    .map(move |e| (u, e.to, e.weight, e.exempt))
            })
            .collect();
        serde_json::to_string(&Dump {
            nodes: self.nodes.iter().map(|n| n.position).collect(),
            edges,
        })
        .expect("graph serializes")
    }

    /// Geometric path for a node index path.
    pub fn path(&self, node_path: &[usize], length: f64) -> GraphPath {
        GraphPath {
            node_ids: node_path.to_vec(),
            waypoints: node_path.iter().map(|&i| self.nodes[i].position).collect(),
            regions: node_path.iter().map(|&i| self.regions[i]).collect(),
            length,
        }
    }
}

impl WeightedGraph for BudgetGraph {
    fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn for_each_neighbor<F: FnMut(usize, f64)>(&self, node: usize, mut visit: F) {
        for e in &self.adjacency[node] {
            visit(e.to, e.weight);
        }
    }
}

/// Whether two nodes may be joined directly. Returns the exemption flag.
pub fn edge_rule(
    distance: f64,
    region_u: Option<usize>,
    region_v: Option<usize>,
    budget: f64,
    tol: f64,
) -> Option<bool> {
    let exempt = region_u.is_some() && region_u == region_v;
    (exempt || distance <= budget + tol).then_some(exempt)
}

/// All-pairs construction. Node membership is resolved with
/// [`Scenario::region_of`], so boundary nodes count as inside.
pub fn build_graph(scn: &Scenario, nodes: Vec<CandidateNode>) -> BudgetGraph {
    let regions: Vec<Option<usize>> = nodes
        .iter()
        .map(|n| n.polytope.or_else(|| scn.region_of(n.position)))
        .collect();
    let mut adjacency: Vec<Vec<Edge>> = vec![Vec::new(); nodes.len()];
    for u in 0..nodes.len() {
        for v in (u + 1)..nodes.len() {
            let weight = nodes[u].position.distance(nodes[v].position);
            if weight == 0.0 {
                continue;
            }
            if let Some(exempt) = edge_rule(weight, regions[u], regions[v], scn.budget, scn.tol) {
                adjacency[u].push(Edge { to: v, weight, exempt });
                adjacency[v].push(Edge { to: u, weight, exempt });
            }
        }
    }
    BudgetGraph {
        nodes,
        regions,
        adjacency,
    }
}

/// Shortest node path as returned by a graph search.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphPath {
    pub node_ids: Vec<usize>,
    pub waypoints: Vec<Point>,
    pub regions: Vec<Option<usize>>,
    pub length: f64,
}

impl GraphPath {
    /// Graph-only path solution. A segment is in-region when both of its
    /// endpoints lie in the same polytope.
    pub fn to_solution(&self, sequence: PolytopeSequence) -> PathSolution {
        let flags = self
            .regions
            .windows(2)
            .map(|r| r[0].is_some() && r[0] == r[1])
            .collect();
        PathSolution::new(Method::GraphOnly, self.waypoints.clone(), flags, sequence)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Label {
    dist: f64,
    hops: usize,
}

impl Label {
    fn cmp(&self, other: &Label) -> Ordering {
        self.dist
            .total_cmp(&other.dist)
            .then(self.hops.cmp(&other.hops))
    }
}

#[derive(PartialEq)]
struct QueueEntry {
    label: Label,
    node: usize,
}

impl Eq for QueueEntry {}

impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap.
        other
            .label
            .cmp(&self.label)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra from `source` to `target`. Returns the node path and its length,
/// or `None` when `target` is unreachable.
pub fn dijkstra<G: WeightedGraph>(graph: &G, source: usize, target: usize) -> Option<(Vec<usize>, f64)> {
    let n = graph.node_count();
    let mut label: Vec<Option<Label>> = vec![None; n];
    let mut pred: Vec<usize> = vec![usize::MAX; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    label[source] = Some(Label { dist: 0.0, hops: 0 });
    heap.push(QueueEntry {
        label: Label { dist: 0.0, hops: 0 },
        node: source,
    });

    while let Some(QueueEntry { label: current, node: u }) = heap.pop() {
        if settled[u] {
            continue;
        }
        settled[u] = true;
        if u == target {
            break;
        }
        graph.for_each_neighbor(u, |v, w| {
            if settled[v] {
                return;
            }
            let candidate = Label {
                dist: current.dist + w,
                hops: current.hops + 1,
            };
            match label[v] {
                Some(existing) => match candidate.cmp(&existing) {
                    Ordering::Less => {
                        label[v] = Some(candidate);
                        pred[v] = u;
                        heap.push(QueueEntry { label: candidate, node: v });
                    }
                    Ordering::Equal if u < pred[v] => pred[v] = u,
                    _ => {}
                },
                None => {
                    label[v] = Some(candidate);
                    pred[v] = u;
                    heap.push(QueueEntry { label: candidate, node: v });
                }
            }
        });
    }

    let length = label[target]?.dist;
    let mut path = vec![target];
    let mut cur = target;
    while cur != source {
        cur = pred[cur];
        path.push(cur);
    }
    path.reverse();
    Some((path, length))
}

/// Shortest budget-feasible path between two graph nodes.
pub fn shortest_graph_path(graph: &BudgetGraph, source: usize, target: usize) -> Result<GraphPath, GraphError> {
    let (nodes, length) = dijkstra(graph, source, target).ok_or(GraphError::Infeasible)?;
    Ok(graph.path(&nodes, length))
}

/// Visitation sequence plus warm-start guesses: for each visited polytope
/// the first and last path waypoint on it.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceExtraction {
    pub sequence: PolytopeSequence,
    pub entries: Vec<Point>,
    pub exits: Vec<Point>,
}

/// Collapses runs of nodes in the same polytope into one sequence entry.
/// Nodes outside every polytope are skipped.
pub fn extract_sequence(path: &GraphPath) -> Result<SequenceExtraction, GraphError> {
    let mut indices: Vec<usize> = Vec::new();
    let mut entries = Vec::new();
    let mut exits = Vec::new();
    for (&p, &region) in path.waypoints.iter().zip(&path.regions) {
        let Some(r) = region else { continue };
        if indices.last() == Some(&r) {
            *exits.last_mut().expect("exit per entry") = p;
            continue;
        }
        if indices.contains(&r) {
            return Err(GraphError::SequenceRepetition { polytope: r });
        }
        indices.push(r);
        entries.push(p);
        exits.push(p);
    }
    Ok(SequenceExtraction {
        sequence: PolytopeSequence(indices),
        entries,
        exits,
    })
}
