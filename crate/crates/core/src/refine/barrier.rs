//! Path-following log-barrier method for small dense conic programs:
//!
//! ```text
//! minimize    c'y
//! subject to  g_i'y <= r_i                    (linear)
//!             |F_j y + f_j| <= e_j'y + e0_j   (second-order cone)
//! ```
//!
//! Each centering step runs damped Newton on `tau c'y + phi(y)` where `phi`
//! is the standard self-concordant barrier. After centering, `nu / tau`
//! bounds the duality gap, which is the termination test.

use nalgebra::{DMatrix, DVector};

#[derive(Clone, Debug)]
pub(crate) enum Constraint {
    /// `g'y <= r`
    Linear { g: DVector<f64>, r: f64 },
    /// `|F y + f0| <= e'y + e0`
    Cone {
        f: DMatrix<f64>,
        f0: DVector<f64>,
        e: DVector<f64>,
        e0: f64,
    },
}

impl Constraint {
    /// Barrier parameter contribution.
    fn nu(&self) -> f64 {
        match self {
            Constraint::Linear { .. } => 1.0,
            // A ball constraint (no variable on the right) is a single
            // convex quadratic.
            Constraint::Cone { e, .. } if e.iter().all(|&v| v == 0.0) => 1.0,
            Constraint::Cone { .. } => 2.0,
        }
    }

    /// Distance-like slack; positive means strictly feasible.
    fn slack(&self, y: &DVector<f64>) -> f64 {
        match self {
            Constraint::Linear { g, r } => r - g.dot(y),
            Constraint::Cone { f, f0, e, e0 } => {
                let u = f * y + f0;
                e.dot(y) + e0 - u.norm()
            }
        }
    }

    fn accumulate(&self, y: &DVector<f64>, grad: &mut DVector<f64>, hess: &mut DMatrix<f64>) {
        match self {
            Constraint::Linear { g, r } => {
                let s = r - g.dot(y);
                grad.axpy(1.0 / s, g, 1.0);
                hess.ger(1.0 / (s * s), g, g, 1.0);
            }
            Constraint::Cone { f, f0, e, e0 } => {
                let u = f * y + f0;
                let w = e.dot(y) + e0;
                let un = u.norm();
                let d = (w - un) * (w + un);
                // grad D = 2 w e - 2 F'u ; hess D = 2 e e' - 2 F'F
                let ftu = f.transpose() * &u;
                let mut grad_d = ftu * -2.0;
                grad_d.axpy(2.0 * w, e, 1.0);
                grad.axpy(-1.0 / d, &grad_d, 1.0);
                let ftf = f.transpose() * f;
                *hess += ftf * (2.0 / d);
                hess.ger(-2.0 / d, e, e, 1.0);
                hess.ger(1.0 / (d * d), &grad_d, &grad_d, 1.0);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct BarrierProblem {
    pub cost: DVector<f64>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct BarrierSettings {
    /// Stop once the duality gap bound `nu / tau` is at most this.
    pub gap_target: f64,
    /// Total Newton step budget across all centering rounds.
    pub max_newton: usize,
    /// Barrier weight multiplier between rounds.
    pub mu: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BarrierStatus {
    Converged,
    MaxIterations,
    Breakdown,
}

#[derive(Clone, Debug)]
pub(crate) struct BarrierOutcome {
    pub y: DVector<f64>,
    pub status: BarrierStatus,
    pub newton_steps: usize,
    pub gap_bound: f64,
    /// Scaled stationarity residual `|c + grad(phi)/tau|_inf`.
    pub stationarity: f64,
}

const NEWTON_DECREMENT_TOL: f64 = 1e-10;

impl BarrierProblem {
    fn nu(&self) -> f64 {
        self.constraints.iter().map(Constraint::nu).sum()
    }

    pub fn strictly_feasible(&self, y: &DVector<f64>) -> bool {
        y.iter().all(|v| v.is_finite()) && self.constraints.iter().all(|c| c.slack(y) > 0.0)
    }

    fn derivatives(&self, y: &DVector<f64>, tau: f64) -> (DVector<f64>, DMatrix<f64>) {
        let n = y.len();
        let mut grad = &self.cost * tau;
        let mut hess = DMatrix::zeros(n, n);
        for c in &self.constraints {
            c.accumulate(y, &mut grad, &mut hess);
        }
        (grad, hess)
    }

    /// Minimizes from the strictly feasible `y0`, starting at weight `tau0`.
    pub fn solve(&self, y0: DVector<f64>, tau0: f64, settings: &BarrierSettings) -> BarrierOutcome {
        debug_assert!(self.strictly_feasible(&y0));
        let nu = self.nu();
        let mut y = y0;
        let mut tau = tau0;
        let mut steps = 0usize;
        loop {
            let status = self.center(&mut y, tau, &mut steps, settings.max_newton);
            let gap_bound = nu / tau;
            if status != BarrierStatus::Converged || gap_bound <= settings.gap_target {
                let (grad, _) = self.derivatives(&y, tau);
                let stationarity = grad.amax() / tau;
                return BarrierOutcome {
                    y,
                    status,
                    newton_steps: steps,
                    gap_bound,
                    stationarity,
                };
            }
            tau *= settings.mu;
        }
    }

    /// Damped Newton centering. Returns `Converged` when the Newton decrement
    /// is small or stops improving.
    fn center(&self, y: &mut DVector<f64>, tau: f64, steps: &mut usize, max_steps: usize) -> BarrierStatus {
        let mut best_decrement = f64::INFINITY;
        let mut stalled = 0;
        loop {
            if *steps >= max_steps {
                return BarrierStatus::MaxIterations;
            }
            let (grad, hess) = self.derivatives(y, tau);
            let Some(dx) = newton_direction(&hess, &grad) else {
                return BarrierStatus::Breakdown;
            };
            let decrement2 = -grad.dot(&dx);
            if !decrement2.is_finite() {
                return BarrierStatus::Breakdown;
            }
            if decrement2 / 2.0 <= NEWTON_DECREMENT_TOL {
                return BarrierStatus::Converged;
            }
            // Rounding noise floor at very large tau: accept once the
            // decrement is small and no longer shrinking.
            if decrement2 < best_decrement * 0.5 {
                best_decrement = decrement2;
                stalled = 0;
            } else if decrement2 < 1e-4 {
                stalled += 1;
                if stalled >= 4 {
                    return BarrierStatus::Converged;
                }
            }
            let lambda = decrement2.max(0.0).sqrt();
            let mut alpha = if lambda > 0.25 { 1.0 / (1.0 + lambda) } else { 1.0 };
            let mut candidate = &*y + &dx * alpha;
            while !self.strictly_feasible(&candidate) {
                alpha *= 0.5;
                if alpha < 1e-18 {
                    return if decrement2 < 1e-4 {
                        BarrierStatus::Converged
                    } else {
                        BarrierStatus::Breakdown
                    };
                }
                candidate = &*y + &dx * alpha;
            }
            *y = candidate;
            *steps += 1;
        }
    }
}

/// Solves `H dx = -g` with Jacobi scaling and a Cholesky factorization,
/// adding diagonal regularization if the scaled matrix is not numerically
/// positive definite.
fn newton_direction(hess: &DMatrix<f64>, grad: &DVector<f64>) -> Option<DVector<f64>> {
    let n = grad.len();
    let scale = DVector::from_iterator(
        n,
        hess.diagonal().iter().map(|&d| if d > 0.0 && d.is_finite() { 1.0 / d.sqrt() } else { 1.0 }),
    );
    let mut scaled = hess.clone();
    for i in 0..n {
        for j in 0..n {
            scaled[(i, j)] *= scale[i] * scale[j];
        }
    }
    let rhs = -grad.component_mul(&scale);
    let mut shift = 0.0;
    for _ in 0..12 {
        let mut m = scaled.clone();
        if shift > 0.0 {
            for i in 0..n {
                m[(i, i)] += shift;
            }
        }
        if let Some(chol) = m.cholesky() {
            let z = chol.solve(&rhs);
            if z.iter().all(|v| v.is_finite()) {
                return Some(z.component_mul(&scale));
            }
        }
        shift = if shift == 0.0 { 1e-14 } else { shift * 100.0 };
    }
    None
}
