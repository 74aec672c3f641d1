//! Fixed-point solvers for the orientability threshold c*, the critical
//! xi*, the core-emergence threshold, and core size/edge predictions.
//!
//! All root-finding is bracketed bisection or monotone fixed-point
//! iteration; the monotonicity/convexity that makes these provably correct
//! is established analytically, and speed is irrelevant at these sizes.

use crate::error::{argument, domain, Result};
use crate::kernel::{mean_gap, q_eval};

/// Edge size k and per-vertex capacity ell of an orientability problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientParams {
    k: u32,
    ell: u32,
}

/// Solution of k*ell = xi Q(xi,ell)/Q(xi,ell+1).
///
/// `gap` is k*ell - xi computed through the cancellation-free series
/// identity; for large k*ell the difference of the stored doubles rounds
/// to zero while `gap` stays exact to relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiSolution {
    pub xi: f64,
    pub gap: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// Threshold quantities for one (k, ell) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub xi_star: f64,
    pub c_star: f64,
    /// defect of the xi* fixed-point equation
    pub residual_xi: f64,
    /// core-emergence threshold min_x x / Q(x,ell)^(k-1)
    pub lambda_core: f64,
    pub iterations: u32,
    /// k*ell - xi*, cancellation-free
    pub xi_gap: f64,
}

/// Predicted (ell+1)-core of a random hypergraph at edge density c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorePrediction {
    /// xi = x_bar * c * k; 0 when no core is predicted
    pub xi: f64,
    /// largest root of x = Q(x c k, ell)^(k-1)
    pub x_bar: f64,
    /// predicted core vertices per vertex: Q(xi, ell+1)
    pub n_frac: f64,
    /// predicted core edges per vertex
    pub m_per_n: f64,
    /// predicted core density m/n
    pub density: f64,
    pub exists: bool,
    /// fixed-point defect |x_bar - Q(x_bar c k, ell)^(k-1)|
    pub residual: f64,
}

impl CorePrediction {
    fn empty() -> Self {
        CorePrediction {
            xi: 0.0,
            x_bar: 0.0,
            n_frac: 0.0,
            m_per_n: 0.0,
            density: 0.0,
            exists: false,
            residual: 0.0,
        }
    }
}

impl OrientParams {
    /// Requires k >= 3, ell >= 2, and k*ell <= 10^4.
    pub fn new(k: u32, ell: u32) -> Result<Self> {
        if k < 3 {
            return Err(argument(format!("edge size k must be >= 3, got {k}")));
        }
        if ell < 2 {
            return Err(argument(format!("capacity ell must be >= 2, got {ell}")));
        }
        if k as u64 * ell as u64 > 10_000 {
            return Err(argument(format!(
                "k*ell = {} exceeds solver cap 10000",
                k as u64 * ell as u64
            )));
        }
        Ok(Self { k, ell })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn kl(&self) -> f64 {
        (self.k as u64 * self.ell as u64) as f64
    }

    /// Full solution of the xi* equation by bisection on the strictly
    /// increasing map x -> x Q(x,ell)/Q(x,ell+1).
    pub fn xi_solution(&self) -> XiSolution {
        let target = self.kl();
        let ell = self.ell;
        let g = |x: f64| x + mean_gap(x, ell);
        let mut lo = 1e-9f64;
        // g(lo) ~ ell+1 < k*ell for k >= 3; grow the bracket defensively
        // anyway in case of extreme parameters
        let mut hi = target;
        while g(hi) <= target {
            hi *= 2.0;
        }
        let mut iterations = 0u32;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            iterations += 1;
            if g(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let xi = 0.5 * (lo + hi);
        let gap = mean_gap(xi, ell);
        let residual = (g(xi) - target).abs();
        debug_assert!(residual <= 1e-10 * target);
        XiSolution {
            xi,
            gap,
            residual,
            iterations,
        }
    }

    /// The unique solution xi* of k*ell = xi Q(xi,ell)/Q(xi,ell+1).
    pub fn solve_xi_star(&self) -> f64 {
        self.xi_solution().xi
    }

    /// Critical density c* = xi* / (k Q(xi*,ell)^(k-1)) plus diagnostics.
    pub fn c_star(&self) -> ThresholdResult {
        let sol = self.xi_solution();
        let q = q_eval(sol.xi, self.ell);
        let c = sol.xi / (self.k as f64 * q.powi(self.k as i32 - 1));
        ThresholdResult {
            xi_star: sol.xi,
            c_star: c,
            residual_xi: sol.residual,
            lambda_core: self.lambda_core_threshold(),
            iterations: sol.iterations,
            xi_gap: sol.gap,
        }
    }

    /// min_{x>0} x / Q(x,ell)^(k-1), the average-degree threshold for a
    /// nonempty (ell+1)-core.
    pub fn lambda_core_threshold(&self) -> f64 {
        let km1 = self.k as i32 - 1;
        let ell = self.ell;
        let x = self.lambda_core_minimizer();
        x / q_eval(x, ell).powi(km1)
    }

    /// Minimizer of F(x) = x / Q(x,ell)^(k-1): golden-section search on
    /// the convex objective, then a sign-change bisection on the
    /// stationarity condition Q(x,ell) = (k-1) x Pr[Po(x)=ell-1], which
    /// golden section alone cannot resolve past ~sqrt(eps) because F
    /// flattens quadratically at the bottom.
    pub fn lambda_core_minimizer(&self) -> f64 {
        let km1 = self.k as i32 - 1;
        let ell = self.ell;
        let f = |x: f64| x / q_eval(x, ell).powi(km1);
        let mut a = 1e-3f64;
        let mut b = self.kl();
        const R: f64 = 0.618_033_988_749_894_9;
        let mut c1 = b - R * (b - a);
        let mut c2 = a + R * (b - a);
        let mut f1 = f(c1);
        let mut f2 = f(c2);
        while b - a > 1e-6 * b {
            if f1 < f2 {
                b = c2;
                c2 = c1;
                f2 = f1;
                c1 = b - R * (b - a);
                f1 = f(c1);
            } else {
                a = c1;
                c1 = c2;
                f1 = f2;
                c2 = a + R * (b - a);
                f2 = f(c2);
            }
        }
        // F' has the sign of this residual
        let slope = |x: f64| {
            q_eval(x, ell) - (self.k - 1) as f64 * x * crate::kernel::poisson_pmf(x, ell as u64 - 1)
        };
        let mut lo = a;
        let mut hi = b;
        while slope(lo) > 0.0 {
            lo *= 0.999;
        }
        while slope(hi) < 0.0 {
            hi *= 1.001;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if slope(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Core size and density prediction at edge density c.
    ///
    /// Below the emergence threshold (with a 1e-12 margin, for determinism)
    /// the prediction is `exists == false`. Otherwise x_bar is obtained by
    /// the monotone-decreasing fixed-point iteration x <- Q(x c k, ell)^(k-1)
    /// started at x = 1, which converges to the largest root.
    pub fn core_prediction(&self, c: f64) -> Result<CorePrediction> {
        if !c.is_finite() || c <= 0.0 {
            return Err(domain(format!(
                "edge density c must be finite and > 0, got {c}"
            )));
        }
        let ck = c * self.k as f64;
        if ck > 1e6 {
            return Err(argument(format!("c*k = {ck} exceeds prediction cap 1e6")));
        }
        let lambda = self.lambda_core_threshold();
        if ck <= lambda + 1e-12 {
            return Ok(CorePrediction::empty());
        }
        let km1 = self.k as i32 - 1;
        let ell = self.ell;
        let map = |x: f64| q_eval(x * ck, ell).powi(km1);
        let mut x = 1.0f64;
        let mut converged = false;
        for _ in 0..1_000_000 {
            let next = map(x);
            debug_assert!(next <= x * (1.0 + 1e-14), "iteration must decrease");
            let step = x - next;
            x = next;
            if step.abs() <= 1e-14 {
                converged = true;
                break;
            }
        }
        let residual = (x - map(x)).abs();
        // the contraction rate tends to 1 exactly at emergence, where the
        // iteration cap can land before the tolerance; anywhere else the
        // step criterion implies the residual one
        debug_assert!(
            residual <= 1e-12 || !converged,
            "fixed point not converged: residual {residual}"
        );
        let x_bar = x;
        let xi = x_bar * ck;
        let n_frac = q_eval(xi, ell + 1);
        let density = (xi + mean_gap(xi, ell)) / self.k as f64;
        Ok(CorePrediction {
            xi,
            x_bar,
            n_frac,
            m_per_n: n_frac * density,
            density,
            exists: true,
            residual,
        })
    }
}
