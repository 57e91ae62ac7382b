//! End-to-end pipeline: straight-line shortcut, wavefront candidates, graph
//! search, sequence extraction, then convex refinement.

use thiserror::Error;

use crate::budget_graph::{build_graph, extract_sequence, shortest_graph_path, BudgetGraph, GraphError, PolytopeSequence};
use crate::refine::{assemble_problem, assemble_solution, solve, RefineError, RefineResult, RefineStatus, SolverSettings};
use crate::scenario::{check_path_feasible, PathSolution, Scenario};
use crate::wavefront::{generate_candidates, NodeOrigin};

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("infeasible: no budget-feasible path")]
    Infeasible,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Refine(#[from] RefineError),
    #[error("refinement reported the graph's sequence as infeasible")]
    RefineInfeasible,
}

#[derive(Clone, Debug, Default)]
pub struct PlanOptions {
    /// Overrides the scenario's wavefront level count.
    pub levels: Option<usize>,
    pub solver: SolverSettings,
    /// Keep the budget graph in the outcome (for dumps).
    pub keep_graph: bool,
}

#[derive(Clone, Debug)]
pub struct PlanOutcome {
    /// Final answer: refined, or the straight line when that fits the budget.
    pub solution: PathSolution,
    /// Path through graph nodes only; absent for straight-line plans.
    pub graph_solution: Option<PathSolution>,
    pub sequence: PolytopeSequence,
    pub node_count: usize,
    pub edge_count: usize,
    pub refine: Option<RefineResult>,
    pub graph: Option<BudgetGraph>,
}

impl PlanOutcome {
    fn straight(scn: &Scenario) -> Self {
        PlanOutcome {
            solution: PathSolution::straight_line(scn),
            graph_solution: None,
            sequence: PolytopeSequence::default(),
            node_count: 0,
            edge_count: 0,
            refine: None,
            graph: None,
        }
    }

    /// Length of the graph-only path, or of the final path when no graph
    /// stage ran.
    pub fn graph_length(&self) -> f64 {
        self.graph_solution
            .as_ref()
            .map_or(self.solution.total_length, |g| g.total_length)
    }
}

/// Runs the graph stage only and returns the graph-only path with its
/// sequence and the graph itself.
pub fn plan_graph(scn: &Scenario, levels: Option<usize>) -> Result<(PathSolution, BudgetGraph, GraphStage), PlanError> {
    let scn = match levels {
        Some(l) => scn.with_levels(l).map_err(|_| PlanError::Infeasible)?,
        None => scn.clone(),
    };
    let candidates = generate_candidates(&scn);
    let source = candidates
        .iter()
        .position(|n| n.origin == NodeOrigin::Start)
        .expect("start node is always generated");
    // The end merges into the start when the two coincide.
    let target = candidates
        .iter()
        .position(|n| n.origin == NodeOrigin::End)
        .unwrap_or(source);
    let graph = build_graph(&scn, candidates);
    let path = shortest_graph_path(&graph, source, target).map_err(|e| match e {
        GraphError::Infeasible => PlanError::Infeasible,
        other => PlanError::Graph(other),
    })?;
    let extraction = extract_sequence(&path)?;
    let solution = path.to_solution(extraction.sequence.clone());
    Ok((
        solution,
        graph,
        GraphStage {
            sequence: extraction.sequence,
            entries: extraction.entries,
            exits: extraction.exits,
        },
    ))
}

/// Sequence and warm-start points from the graph stage.
#[derive(Clone, Debug)]
pub struct GraphStage {
    pub sequence: PolytopeSequence,
    pub entries: Vec<crate::geometry::Point>,
    pub exits: Vec<crate::geometry::Point>,
}

/// Plans a shortest budget-feasible path.
pub fn plan(scn: &Scenario, options: &PlanOptions) -> Result<PlanOutcome, PlanError> {
    if scn.straight_line_length() <= scn.budget {
        return Ok(PlanOutcome::straight(scn));
    }
    let (graph_solution, graph, stage) = plan_graph(scn, options.levels)?;
    let node_count = graph.nodes().len();
    let edge_count = graph.edge_count();
    let graph = options.keep_graph.then_some(graph);
    if stage.sequence.is_empty() {
        // Only reachable when the direct hop fits within the tolerance.
        return Ok(PlanOutcome {
            node_count,
            edge_count,
            graph,
            ..PlanOutcome::straight(scn)
        });
    }

    let problem = assemble_problem(scn, &stage.sequence)?;
    let entries: Vec<_> = stage.entries.iter().map(|&p| crate::refine::to_vector(p)).collect();
    let exits: Vec<_> = stage.exits.iter().map(|&p| crate::refine::to_vector(p)).collect();
    let result = solve(&problem, Some((&entries, &exits)), &options.solver)?;
    if result.status != RefineStatus::Optimal {
        return Err(PlanError::RefineInfeasible);
    }
    let refined = assemble_solution(scn, &stage.sequence, &result);
    // Hops with no strict interior are solved with a slightly relaxed
    // budget; if that leaks past the checker's tolerance, the graph path is
    // the answer.
    let solution = if check_path_feasible(scn, &refined) || !check_path_feasible(scn, &graph_solution) {
        refined
    } else {
        graph_solution.clone()
    };
    Ok(PlanOutcome {
        solution,
        graph_solution: Some(graph_solution),
        sequence: stage.sequence,
        node_count,
        edge_count,
        refine: Some(result),
        graph,
    })
}
