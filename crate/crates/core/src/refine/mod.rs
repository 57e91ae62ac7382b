//! Continuous refinement of entry and exit points for a fixed visitation
//! sequence.
//!
//! For a sequence of `k` polytopes the decision variables are the entry point
//! `a_i` and exit point `b_i` of each polytope. The objective is the length of
//! the chain `start -> a_1 -> b_1 -> ... -> b_k -> end`; every hop between
//! polytopes (and from start / to end) must fit the budget, and each `a_i`,
//! `b_i` must satisfy its polytope's inequalities. This is a second-order cone
//! program, solved here with a log-barrier interior-point method.
//!
//! Points are length-`n` vectors, so the solver works in any dimension even
//! though the rest of the pipeline is planar.

mod barrier;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::budget_graph::PolytopeSequence;
use crate::geometry::Point;
use crate::scenario::{Method, PathSolution, Scenario};

use barrier::{BarrierOutcome, BarrierProblem, BarrierSettings, BarrierStatus, Constraint};

#[derive(Debug, Clone, Error)]
pub enum RefineError {
    #[error("sequence entry {position} refers to polytope {index}, but there are only {count}")]
    InvalidSequence {
        position: usize,
        index: usize,
        count: usize,
    },
    #[error("solver hit the iteration limit ({} Newton steps)", .0.solver_iterations)]
    MaxIterations(Box<RefineResult>),
    #[error("solver produced non-finite values")]
    NumericalBreakdown,
}

/// A point variable or a fixed endpoint of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Start,
    End,
    /// Entry point of the `i`-th polytope in the sequence.
    Entry(usize),
    /// Exit point of the `i`-th polytope in the sequence.
    Exit(usize),
}

impl Endpoint {
    /// Index into the variable vector, `None` for fixed endpoints.
    pub fn variable(self) -> Option<usize> {
        match self {
            Endpoint::Entry(i) => Some(2 * i),
            Endpoint::Exit(i) => Some(2 * i + 1),
            Endpoint::Start | Endpoint::End => None,
        }
    }
}

/// `{x : normals x <= offsets}` with a known strictly interior point.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionBlock {
    pub polytope: usize,
    pub normals: DMatrix<f64>,
    pub offsets: DVector<f64>,
    pub interior: DVector<f64>,
}

impl RegionBlock {
    pub fn max_violation(&self, x: &DVector<f64>) -> f64 {
        (&self.normals * x - &self.offsets).max()
    }
}

/// Membership of one point variable in one region block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MembershipConstraint {
    pub variable: Endpoint,
    /// Index into [`ConicProblem::regions`].
    pub block: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConicProblem {
    pub dim: usize,
    pub start: DVector<f64>,
    pub end: DVector<f64>,
    pub budget: f64,
    /// One block per sequence position.
    pub regions: Vec<RegionBlock>,
    /// Norm terms of the objective, in chain order (`2k + 1` of them).
    pub objective_terms: Vec<(Endpoint, Endpoint)>,
    /// Hops bounded by the budget (`k + 1` of them).
    pub hop_constraints: Vec<(Endpoint, Endpoint)>,
    /// Two blocks per sequence position: entry, then exit.
    pub membership: Vec<MembershipConstraint>,
}

impl ConicProblem {
    /// Builds the program for a chain through `regions` in order.
    pub fn new(start: DVector<f64>, end: DVector<f64>, budget: f64, regions: Vec<RegionBlock>) -> Self {
        let k = regions.len();
        let dim = start.len();
        let chain = Self::chain(k);
        let objective_terms: Vec<_> = chain.windows(2).map(|w| (w[0], w[1])).collect();
        // Even-numbered terms leave one region (or the start) for the next.
        let hop_constraints = objective_terms.iter().step_by(2).copied().collect();
        let membership = (0..k)
            .flat_map(|i| {
                [
                    MembershipConstraint {
                        variable: Endpoint::Entry(i),
                        block: i,
                    },
                    MembershipConstraint {
                        variable: Endpoint::Exit(i),
                        block: i,
                    },
                ]
            })
            .collect();
        ConicProblem {
            dim,
            start,
            end,
            budget,
            regions,
            objective_terms,
            hop_constraints,
            membership,
        }
    }

    fn chain(k: usize) -> Vec<Endpoint> {
        let mut chain = vec![Endpoint::Start];
        for i in 0..k {
            chain.push(Endpoint::Entry(i));
            chain.push(Endpoint::Exit(i));
        }
        chain.push(Endpoint::End);
        chain
    }

    pub fn sequence_len(&self) -> usize {
        self.regions.len()
    }

    /// Number of point variables, `2k`.
    pub fn variable_count(&self) -> usize {
        2 * self.regions.len()
    }

    pub fn linear_row_count(&self) -> usize {
        self.membership
            .iter()
            .map(|m| self.regions[m.block].normals.nrows())
            .sum()
    }

    fn resolve<'a>(&'a self, ep: Endpoint, points: &'a [DVector<f64>]) -> &'a DVector<f64> {
        match ep {
            Endpoint::Start => &self.start,
            Endpoint::End => &self.end,
            other => &points[other.variable().expect("variable endpoint")],
        }
    }

    /// Objective at the given entries and exits: the chain length.
    pub fn objective(&self, entries: &[DVector<f64>], exits: &[DVector<f64>]) -> f64 {
        let points = interleave(entries, exits);
        self.objective_terms
            .iter()
            .map(|&(u, v)| (self.resolve(v, &points) - self.resolve(u, &points)).norm())
            .sum()
    }

    /// Largest violation over hop bounds and membership rows (`<= 0` means
    /// feasible).
    pub fn max_violation(&self, entries: &[DVector<f64>], exits: &[DVector<f64>]) -> f64 {
        let points = interleave(entries, exits);
        let hops = self
            .hop_constraints
            .iter()
            .map(|&(u, v)| (self.resolve(v, &points) - self.resolve(u, &points)).norm() - self.budget);
        let rows = self.membership.iter().map(|m| {
            let x = &points[m.variable.variable().expect("variable endpoint")];
            self.regions[m.block].max_violation(x)
        });
        hops.chain(rows).fold(f64::NEG_INFINITY, f64::max)
    }
}

fn interleave(entries: &[DVector<f64>], exits: &[DVector<f64>]) -> Vec<DVector<f64>> {
    entries
        .iter()
        .zip(exits)
        .flat_map(|(a, b)| [a.clone(), b.clone()])
        .collect()
}

/// Builds the program for `seq` over the scenario's polytopes.
pub fn assemble_problem(scn: &Scenario, seq: &PolytopeSequence) -> Result<ConicProblem, RefineError> {
    let count = scn.polytopes.len();
    let regions = seq
        .indices()
        .iter()
        .enumerate()
        .map(|(position, &index)| {
            let poly = scn.polytopes.get(index).ok_or(RefineError::InvalidSequence {
                position,
                index,
                count,
            })?;
            let rows = poly.normals();
            let normals = DMatrix::from_fn(rows.len(), 2, |r, c| if c == 0 { rows[r].x } else { rows[r].y });
            Ok(RegionBlock {
                polytope: index,
                normals,
                offsets: DVector::from_column_slice(poly.offsets()),
                interior: to_vector(poly.centroid()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConicProblem::new(to_vector(scn.start), to_vector(scn.end), scn.budget, regions))
}

pub fn to_vector(p: Point) -> DVector<f64> {
    DVector::from_vec(vec![p.x, p.y])
}

pub fn to_point(v: &DVector<f64>) -> Point {
    Point::new(v[0], v[1])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverSettings {
    /// Allowed constraint violation in reported points.
    pub feastol: f64,
    /// Allowed gap between the reported and optimal objective.
    pub gaptol: f64,
    /// Newton step budget.
    pub max_iter: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            feastol: 1e-7,
            gaptol: 1e-7,
            max_iter: 50_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefineStatus {
    Optimal,
    Infeasible,
    MaxIterations,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RefineResult {
    pub entries: Vec<DVector<f64>>,
    pub exits: Vec<DVector<f64>>,
    pub objective_value: f64,
    pub status: RefineStatus,
    pub solver_iterations: usize,
    /// Larger of the duality gap bound and the stationarity residual.
    pub kkt_residual: f64,
}

impl RefineResult {
    fn infeasible(iterations: usize) -> Self {
        RefineResult {
            entries: Vec::new(),
            exits: Vec::new(),
            objective_value: f64::INFINITY,
            status: RefineStatus::Infeasible,
            solver_iterations: iterations,
            kkt_residual: 0.0,
        }
    }

    pub fn entry_points(&self) -> Vec<Point> {
        self.entries.iter().map(to_point).collect()
    }

    pub fn exit_points(&self) -> Vec<Point> {
        self.exits.iter().map(to_point).collect()
    }
}

/// Strictly feasible closest pair for one hop.
struct HopStart {
    from: Option<DVector<f64>>,
    to: Option<DVector<f64>>,
    /// Budget to impose on this hop; above `budget` only when the hop is
    /// feasible but has no strict interior.
    budget: f64,
}

/// Entry and exit points to start from.
pub type WarmStart<'a> = (&'a [DVector<f64>], &'a [DVector<f64>]);

/// Solves the refinement program.
///
/// Before iterating, each hop's minimum achievable length is computed (the
/// hops are independent since every point variable appears in exactly one of
/// them). A hop whose minimum exceeds `budget + feastol` makes the program
/// infeasible. The closest pairs also give a strictly feasible start, which
/// is blended with `warm_start` when that is feasible.
pub fn solve(
    problem: &ConicProblem,
    warm_start: Option<WarmStart<'_>>,
    settings: &SolverSettings,
) -> Result<RefineResult, RefineError> {
    let k = problem.sequence_len();
    let n = problem.dim;
    let q = problem.budget;
    if k == 0 {
        let length = (&problem.end - &problem.start).norm();
        return Ok(if length <= q + settings.feastol {
            RefineResult {
                entries: Vec::new(),
                exits: Vec::new(),
                objective_value: length,
                status: RefineStatus::Optimal,
                solver_iterations: 0,
                kkt_residual: 0.0,
            }
        } else {
            RefineResult::infeasible(0)
        });
    }

    let mut iterations = 0usize;
    let mut hops = Vec::with_capacity(problem.hop_constraints.len());
    for &(from, to) in &problem.hop_constraints {
        let (hop, lower_bound, steps) = closest_pair(problem, from, to, settings)?;
        iterations += steps;
        if lower_bound > q + settings.feastol {
            return Ok(RefineResult::infeasible(iterations));
        }
        hops.push(hop);
    }

    // Each point variable belongs to exactly one hop.
    let mut points: Vec<DVector<f64>> = vec![DVector::zeros(n); 2 * k];
    for (&(from, to), hop) in problem.hop_constraints.iter().zip(&hops) {
        if let (Some(v), Some(p)) = (from.variable(), &hop.from) {
            points[v] = p.clone();
        }
        if let (Some(v), Some(p)) = (to.variable(), &hop.to) {
            points[v] = p.clone();
        }
    }
    let hop_budgets: Vec<f64> = hops.iter().map(|h| h.budget).collect();
    let layout = Layout { n, k };
    let program = barrier_program(problem, &hop_budgets, &layout);

    let warm_points = warm_start.filter(|(a, b)| a.len() == k && b.len() == k).map(|(a, b)| interleave(a, b));
    let mut y0 = layout.pack(problem, &points, q);
    if let Some(warm) = &warm_points {
        let blended: Vec<DVector<f64>> = points.iter().zip(warm).map(|(s, w)| (s + w) * 0.5).collect();
        let candidate = layout.pack(problem, &blended, q);
        if program.strictly_feasible(&candidate) {
            y0 = candidate;
        }
    }
    if !program.strictly_feasible(&y0) {
        return Err(RefineError::NumericalBreakdown);
    }

    let tau0 = program_nu_estimate(&layout, problem) / y0.rows(layout.t_offset(), 2 * k + 1).sum();
    let gap_target = (settings.gaptol * 1e-2 * q).min(settings.gaptol);
    let outcome = program.solve(
        y0,
        tau0,
        &BarrierSettings {
            gap_target,
            max_newton: settings.max_iter.saturating_sub(iterations).max(1),
            mu: 10.0,
        },
    );
    iterations += outcome.newton_steps;
    finish(problem, &layout, outcome, iterations, warm_points, settings)
}

fn finish(
    problem: &ConicProblem,
    layout: &Layout,
    outcome: BarrierOutcome,
    iterations: usize,
    warm_points: Option<Vec<DVector<f64>>>,
    settings: &SolverSettings,
) -> Result<RefineResult, RefineError> {
    if outcome.status == BarrierStatus::Breakdown || outcome.y.iter().any(|v| !v.is_finite()) {
        return Err(RefineError::NumericalBreakdown);
    }
    let points = layout.unpack(&outcome.y);
    let (mut entries, mut exits): (Vec<_>, Vec<_>) = split(points);
    let objective_value = problem.objective(&entries, &exits);

    // The warm start is itself feasible for the program; never report
    // anything worse than it.
    if let Some(warm) = warm_points {
        let (wa, wb) = split(warm);
        if problem.max_violation(&wa, &wb) <= settings.feastol {
            let warm_value = problem.objective(&wa, &wb);
            if warm_value < objective_value {
                entries = wa;
                exits = wb;
            }
        }
    }

    slide_to_boundary(problem, &mut entries, &mut exits);
    let objective_value = problem.objective(&entries, &exits);

    let result = RefineResult {
        entries,
        exits,
        objective_value,
        status: RefineStatus::Optimal,
        solver_iterations: iterations,
        kkt_residual: outcome.gap_bound.max(outcome.stationarity),
    };
    match outcome.status {
        BarrierStatus::Converged => Ok(result),
        _ => Err(RefineError::MaxIterations(Box::new(RefineResult {
            status: RefineStatus::MaxIterations,
            ..result
        }))),
    }
}

/// First point of the segment `from -> inside` that lies in the region, where
/// `inside` is a member.
fn clip_toward(block: &RegionBlock, from: &DVector<f64>, inside: &DVector<f64>) -> DVector<f64> {
    let d = inside - from;
    let mut t = 0.0f64;
    for (row, &offset) in block.normals.row_iter().zip(block.offsets.iter()) {
        let hd = row.transpose().dot(&d);
        if hd < 0.0 {
            t = t.max((offset - row.transpose().dot(from)) / hd);
        }
    }
    from + d * t.min(1.0)
}

/// Moves each entry back along the incoming segment and each exit forward
/// along the outgoing one until they hit the region boundary. When a path
/// passes straight through a region, every split of that straight run is
/// optimal; this picks the one that spends the longest stretch inside. The
/// move is kept only if it shortens neither the budget margin nor the path.
fn slide_to_boundary(problem: &ConicProblem, entries: &mut [DVector<f64>], exits: &mut [DVector<f64>]) {
    let k = entries.len();
    let q = problem.budget;
    let try_move = |block: &RegionBlock, anchor: &DVector<f64>, point: &mut DVector<f64>, toward: &DVector<f64>| {
        let moved = clip_toward(block, anchor, toward);
        let old_hop = (&*point - anchor).norm();
        let new_hop = (&moved - anchor).norm();
        let old_len = old_hop + (&*point - toward).norm();
        let new_len = new_hop + (&moved - toward).norm();
        let slack = 1e-12 * (1.0 + block.offsets.amax());
        if new_hop <= old_hop.max(q)
            && new_len <= old_len * (1.0 + 4.0 * f64::EPSILON)
            && block.max_violation(&moved) <= block.max_violation(point).max(0.0) + slack
        {
            *point = moved;
        }
    };
    for i in 0..k {
        let block = &problem.regions[i];
        let prev = if i == 0 { problem.start.clone() } else { exits[i - 1].clone() };
        let exit = exits[i].clone();
        try_move(block, &prev, &mut entries[i], &exit);
        let next = if i + 1 == k { problem.end.clone() } else { entries[i + 1].clone() };
        let entry = entries[i].clone();
        try_move(block, &next, &mut exits[i], &entry);
    }
}

fn split(points: Vec<DVector<f64>>) -> (Vec<DVector<f64>>, Vec<DVector<f64>>) {
    let mut entries = Vec::with_capacity(points.len() / 2);
    let mut exits = Vec::with_capacity(points.len() / 2);
    for (i, p) in points.into_iter().enumerate() {
        if i % 2 == 0 {
            entries.push(p);
        } else {
            exits.push(p);
        }
    }
    (entries, exits)
}

/// Variable layout: `2k` points of dimension `n`, then one epigraph
/// variable per objective term.
struct Layout {
    n: usize,
    k: usize,
}

impl Layout {
    fn len(&self) -> usize {
        2 * self.k * self.n + 2 * self.k + 1
    }

    fn t_offset(&self) -> usize {
        2 * self.k * self.n
    }

    /// Selector for an endpoint: `(matrix, constant)` with
    /// `point = matrix * y + constant`.
    fn select(&self, problem: &ConicProblem, ep: Endpoint) -> (DMatrix<f64>, DVector<f64>) {
        let mut m = DMatrix::zeros(self.n, self.len());
        match ep.variable() {
            Some(v) => {
                for d in 0..self.n {
                    m[(d, v * self.n + d)] = 1.0;
                }
                (m, DVector::zeros(self.n))
            }
            None => {
                let c = if ep == Endpoint::Start { &problem.start } else { &problem.end };
                (m, c.clone())
            }
        }
    }

    fn pack(&self, problem: &ConicProblem, points: &[DVector<f64>], scale: f64) -> DVector<f64> {
        let mut y = DVector::zeros(self.len());
        for (v, p) in points.iter().enumerate() {
            y.rows_mut(v * self.n, self.n).copy_from(p);
        }
        for (j, &(u, v)) in problem.objective_terms.iter().enumerate() {
            let pu = self.point(problem, points, u);
            let pv = self.point(problem, points, v);
            y[self.t_offset() + j] = (pv - pu).norm() + scale;
        }
        y
    }

    fn point(&self, problem: &ConicProblem, points: &[DVector<f64>], ep: Endpoint) -> DVector<f64> {
        match ep {
            Endpoint::Start => problem.start.clone(),
            Endpoint::End => problem.end.clone(),
            other => points[other.variable().expect("variable endpoint")].clone(),
        }
    }

    fn unpack(&self, y: &DVector<f64>) -> Vec<DVector<f64>> {
        (0..2 * self.k)
            .map(|v| y.rows(v * self.n, self.n).into_owned())
            .collect()
    }
}

fn program_nu_estimate(layout: &Layout, problem: &ConicProblem) -> f64 {
    2.0 * (2 * layout.k + 1) as f64 + problem.hop_constraints.len() as f64 + problem.linear_row_count() as f64
}

fn barrier_program(problem: &ConicProblem, hop_budgets: &[f64], layout: &Layout) -> BarrierProblem {
    let len = layout.len();
    let mut cost = DVector::zeros(len);
    let mut constraints = Vec::new();
    for (j, &(u, v)) in problem.objective_terms.iter().enumerate() {
        let t = layout.t_offset() + j;
        cost[t] = 1.0;
        let (mu, cu) = layout.select(problem, u);
        let (mv, cv) = layout.select(problem, v);
        let mut e = DVector::zeros(len);
        e[t] = 1.0;
        constraints.push(Constraint::Cone {
            f: mv - mu,
            f0: cv - cu,
            e,
            e0: 0.0,
        });
    }
    for (&(u, v), &budget) in problem.hop_constraints.iter().zip(hop_budgets) {
        let (mu, cu) = layout.select(problem, u);
        let (mv, cv) = layout.select(problem, v);
        constraints.push(Constraint::Cone {
            f: mv - mu,
            f0: cv - cu,
            e: DVector::zeros(len),
            e0: budget,
        });
    }
    for m in &problem.membership {
        let block = &problem.regions[m.block];
        let v = m.variable.variable().expect("variable endpoint");
        for r in 0..block.normals.nrows() {
            let mut g = DVector::zeros(len);
            for d in 0..layout.n {
                g[v * layout.n + d] = block.normals[(r, d)];
            }
            constraints.push(Constraint::Linear { g, r: block.offsets[r] });
        }
    }
    BarrierProblem { cost, constraints }
}

/// Minimum-length configuration of one hop. Returns the strictly feasible
/// start for that hop, a lower bound on its minimum length, and the Newton
/// steps spent.
fn closest_pair(
    problem: &ConicProblem,
    from: Endpoint,
    to: Endpoint,
    settings: &SolverSettings,
) -> Result<(HopStart, f64, usize), RefineError> {
    let n = problem.dim;
    let q = problem.budget;
    let block_of = |ep: Endpoint| match ep {
        Endpoint::Entry(i) | Endpoint::Exit(i) => Some(&problem.regions[i]),
        _ => None,
    };
    let fixed = |ep: Endpoint| match ep {
        Endpoint::Start => Some(problem.start.clone()),
        Endpoint::End => Some(problem.end.clone()),
        _ => None,
    };
    let free: Vec<(Endpoint, &RegionBlock)> = [from, to]
        .into_iter()
        .filter_map(|ep| block_of(ep).map(|b| (ep, b)))
        .collect();
    // Layout: free points, then t.
    let len = free.len() * n + 1;
    let t = len - 1;
    let select = |ep: Endpoint| -> (DMatrix<f64>, DVector<f64>) {
        let mut m = DMatrix::zeros(n, len);
        if let Some(slot) = free.iter().position(|(e, _)| *e == ep) {
            for d in 0..n {
                m[(d, slot * n + d)] = 1.0;
            }
            (m, DVector::zeros(n))
        } else {
            (m, fixed(ep).expect("fixed endpoint"))
        }
    };
    let (mf, cf) = select(from);
    let (mt, ct) = select(to);
    let mut e = DVector::zeros(len);
    e[t] = 1.0;
    let mut constraints = vec![Constraint::Cone {
        f: mt - mf,
        f0: ct - cf,
        e,
        e0: 0.0,
    }];
    let mut y0 = DVector::zeros(len);
    for (slot, (_, block)) in free.iter().enumerate() {
        y0.rows_mut(slot * n, n).copy_from(&block.interior);
        for r in 0..block.normals.nrows() {
            let mut g = DVector::zeros(len);
            for d in 0..n {
                g[slot * n + d] = block.normals[(r, d)];
            }
            constraints.push(Constraint::Linear { g, r: block.offsets[r] });
        }
    }
    let endpoint_value = |ep: Endpoint, y: &DVector<f64>| -> DVector<f64> {
        let (m, c) = select(ep);
        m * y + c
    };
    y0[t] = (endpoint_value(to, &y0) - endpoint_value(from, &y0)).norm() + q;
    let mut cost = DVector::zeros(len);
    cost[t] = 1.0;
    let program = BarrierProblem { cost, constraints };
    if !program.strictly_feasible(&y0) {
        return Err(RefineError::NumericalBreakdown);
    }
    let nu = 2.0 + (len - 1) as f64;
    let outcome = program.solve(
        y0.clone(),
        nu / y0[t],
        &BarrierSettings {
            gap_target: 1e-2 * settings.feastol * q.min(1.0),
            max_newton: settings.max_iter,
            mu: 10.0,
        },
    );
    if outcome.status == BarrierStatus::Breakdown {
        return Err(RefineError::NumericalBreakdown);
    }
    let y = outcome.y;
    let pf = endpoint_value(from, &y);
    let pt = endpoint_value(to, &y);
    let length = (&pt - &pf).norm();
    let lower_bound = y[t] - outcome.gap_bound;
    let budget = if length < q {
        q
    } else {
        // Feasible only within tolerance: leave a sliver of room so the main
        // program has a strict interior.
        length + 0.5 * (q + settings.feastol - length).max(0.0)
    };
    let hop = HopStart {
        from: block_of(from).map(|_| pf),
        to: block_of(to).map(|_| pt),
        budget,
    };
    Ok((hop, lower_bound, outcome.newton_steps))
}

/// Path solution `start, a_1, b_1, ..., b_k, end` from an optimal result.
pub fn assemble_solution(scn: &Scenario, seq: &PolytopeSequence, result: &RefineResult) -> PathSolution {
    let mut waypoints = vec![scn.start];
    let mut flags = Vec::new();
    for (a, b) in result.entries.iter().zip(&result.exits) {
        waypoints.push(to_point(a));
        waypoints.push(to_point(b));
        flags.push(false);
        flags.push(true);
    }
    waypoints.push(scn.end);
    flags.push(false);
    PathSolution::new(Method::Refined, waypoints, flags, seq.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Polytope, DEFAULT_TOL};

    fn square(x0: f64, y0: f64, x1: f64, y1: f64) -> Polytope {
        Polytope::from_vertices(
            0,
            &[
                Point::new(x0, y0),
                Point::new(x1, y0),
                Point::new(x1, y1),
                Point::new(x0, y1),
            ],
            DEFAULT_TOL,
        )
        .unwrap()
    }

    fn chord() -> Scenario {
        Scenario::new(
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            3.0,
            vec![square(1.5, -0.5, 2.5, 0.5)],
            4,
            DEFAULT_TOL,
        )
        .unwrap()
    }

    #[test]
    fn problem_sizes_follow_sequence_length() {
        let polys = (0..3).map(|i| square(3.0 * i as f64, 0.0, 3.0 * i as f64 + 1.0, 1.0)).collect();
        let scn = Scenario::new(Point::new(-1.0, 0.0), Point::new(9.0, 0.0), 3.0, polys, 4, DEFAULT_TOL).unwrap();
        let one = assemble_problem(&scn, &PolytopeSequence::new(vec![1])).unwrap();
        assert_eq!(one.variable_count(), 2);
        assert_eq!(one.hop_constraints.len(), 2);
        assert_eq!(one.membership.len(), 2);
        assert_eq!(one.objective_terms.len(), 3);
        let three = assemble_problem(&scn, &PolytopeSequence::new(vec![0, 1, 2])).unwrap();
        assert_eq!(three.variable_count(), 6);
        assert_eq!(three.hop_constraints.len(), 4);
        assert_eq!(three.linear_row_count(), 6 * 4);
        assert_eq!(
            three.hop_constraints,
            vec![
                (Endpoint::Start, Endpoint::Entry(0)),
                (Endpoint::Exit(0), Endpoint::Entry(1)),
                (Endpoint::Exit(1), Endpoint::Entry(2)),
                (Endpoint::Exit(2), Endpoint::End),
            ]
        );
        assert!(matches!(
            assemble_problem(&scn, &PolytopeSequence::new(vec![0, 3])),
            Err(RefineError::InvalidSequence { position: 1, index: 3, count: 3 })
        ));
    }

    #[test]
    fn chord_through_square() {
        let scn = chord();
        let seq = PolytopeSequence::new(vec![0]);
        let problem = assemble_problem(&scn, &seq).unwrap();
        let result = solve(&problem, None, &SolverSettings::default()).unwrap();
        assert_eq!(result.status, RefineStatus::Optimal);
        assert!((result.objective_value - 4.0).abs() < 1e-6, "{}", result.objective_value);
        let a = result.entry_points()[0];
        let b = result.exit_points()[0];
        assert!(a.distance(Point::new(1.5, 0.0)) < 1e-5, "{a}");
        assert!(b.distance(Point::new(2.5, 0.0)) < 1e-5, "{b}");
        let sol = assemble_solution(&scn, &seq, &result);
        assert_eq!(sol.waypoints.len(), 4);
        assert_eq!(sol.segment_in_region, vec![false, true, false]);
        assert!((sol.total_length - result.objective_value).abs() < 1e-12);
    }

    #[test]
    fn zero_length_optimum_on_boundary() {
        let p = Point::new(0.0, 0.0);
        let scn = Scenario::new(p, p, 3.0, vec![square(0.0, -1.0, 1.0, 1.0)], 4, DEFAULT_TOL).unwrap();
        let problem = assemble_problem(&scn, &PolytopeSequence::new(vec![0])).unwrap();
        let result = solve(&problem, None, &SolverSettings::default()).unwrap();
        assert_eq!(result.status, RefineStatus::Optimal);
        assert!(result.objective_value < 1e-6, "{}", result.objective_value);
        assert!(result.entry_points()[0].distance(p) < 1e-6);
        assert!(result.exit_points()[0].distance(p) < 1e-6);
    }

    #[test]
    fn unreachable_end_is_infeasible() {
        let scn = Scenario::new(
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            3.0,
            vec![square(4.0, -1.0, 6.0, 1.0)],
            4,
            DEFAULT_TOL,
        )
        .unwrap();
        let problem = assemble_problem(&scn, &PolytopeSequence::new(vec![0])).unwrap();
        let result = solve(&problem, None, &SolverSettings::default()).unwrap();
        assert_eq!(result.status, RefineStatus::Infeasible);
    }

    #[test]
    fn budget_bends_the_path() {
        // Region above the straight line. Unconstrained, the path would touch
        // it at the single point (3, 1) with hops sqrt(10) > 3.1, so the
        // budget binds: by symmetry a = (x, 1), b = (6 - x, 1) with
        // x = sqrt(3.1^2 - 1), giving 2 * 3.1 + 6 - 2x.
        let scn = Scenario::new(
            Point::new(0.0, 0.0),
            Point::new(6.0, 0.0),
            3.1,
            vec![square(2.0, 1.0, 4.0, 2.0)],
            4,
            DEFAULT_TOL,
        )
        .unwrap();
        let problem = assemble_problem(&scn, &PolytopeSequence::new(vec![0])).unwrap();
        let result = solve(&problem, None, &SolverSettings::default()).unwrap();
        assert_eq!(result.status, RefineStatus::Optimal);
        let x = (3.1f64 * 3.1 - 1.0).sqrt();
        let expected = 6.2 + 6.0 - 2.0 * x;
        assert!((result.objective_value - expected).abs() < 1e-7, "{}", result.objective_value);
        assert!(problem.max_violation(&result.entries, &result.exits) <= 0.0);
        assert!(result.entry_points()[0].distance(Point::new(x, 1.0)) < 1e-5);
    }

    #[test]
    fn works_in_three_dimensions() {
        // Unit cube at [2,3]^3 between (0,0,0) and (5,5,5) with budget 3.6:
        // the straight diagonal crosses the cube, entering at (2,2,2) and
        // leaving at (3,3,3), hops sqrt(12) < 3.6.
        let mut normals = DMatrix::zeros(6, 3);
        let mut offsets = DVector::zeros(6);
        for d in 0..3 {
            normals[(2 * d, d)] = 1.0;
            offsets[2 * d] = 3.0;
            normals[(2 * d + 1, d)] = -1.0;
            offsets[2 * d + 1] = -2.0;
        }
        let block = RegionBlock {
            polytope: 0,
            normals,
            offsets,
            interior: DVector::from_element(3, 2.5),
        };
        let problem = ConicProblem::new(DVector::zeros(3), DVector::from_element(3, 5.0), 3.6, vec![block]);
        let result = solve(&problem, None, &SolverSettings::default()).unwrap();
        let expected = 75f64.sqrt();
        assert!((result.objective_value - expected).abs() < 1e-7);
        assert!((&result.entries[0] - DVector::from_element(3, 2.0)).norm() < 1e-5);
    }

    #[test]
    fn feasible_warm_start_is_accepted() {
        let scn = chord();
        let problem = assemble_problem(&scn, &PolytopeSequence::new(vec![0])).unwrap();
        let a = vec![to_vector(Point::new(1.5, 0.5))];
        let b = vec![to_vector(Point::new(2.5, -0.5))];
        let warm = problem.objective(&a, &b);
        let result = solve(&problem, Some((&a, &b)), &SolverSettings::default()).unwrap();
        assert!(result.objective_value <= warm);
        assert!((result.objective_value - 4.0).abs() < 1e-6);
    }

    #[test]
    fn iteration_limit_reports_best_iterate() {
        let problem = assemble_problem(&chord(), &PolytopeSequence::new(vec![0])).unwrap();
        let settings = SolverSettings {
            max_iter: 3,
            ..SolverSettings::default()
        };
        match solve(&problem, None, &settings) {
            Err(RefineError::MaxIterations(best)) => {
                assert_eq!(best.status, RefineStatus::MaxIterations);
                assert_eq!(best.entries.len(), 1);
            }
            other => panic!("expected iteration limit, got {other:?}"),
        }
    }
}
