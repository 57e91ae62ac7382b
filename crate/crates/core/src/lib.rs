//! Shortest paths in the plane under a travel budget that resets inside
//! convex replenishment regions.
//!
//! Planning runs in two stages. A wavefront generator places candidate
//! waypoints on region boundaries and a budget-constrained graph search picks
//! the sequence of regions to visit ([`wavefront`], [`budget_graph`]). A
//! second-order cone program then moves the entry and exit points of each
//! visited region to their optimal positions ([`refine`]). [`oracle`] is an
//! independent brute-force check based on dense boundary sampling.
//!
//! ```no_run
//! use reset_planner::{plan, PlanOptions, Scenario};
//!
//! let scn = Scenario::from_json(&std::fs::read_to_string("scenario.json")?)?;
//! let outcome = plan(&scn, &PlanOptions::default())?;
//! println!("{}", outcome.solution.total_length);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod budget_graph;
pub mod cli;
pub mod geometry;
pub mod oracle;
pub mod planner;
pub mod refine;
pub mod scenario;
pub mod wavefront;

pub use budget_graph::{BudgetGraph, GraphError, PolytopeSequence};
pub use geometry::{Point, Polytope, Segment};
pub use planner::{plan, PlanError, PlanOptions, PlanOutcome};
pub use scenario::{check_path_feasible, load_scenario, Method, PathSolution, Scenario};
