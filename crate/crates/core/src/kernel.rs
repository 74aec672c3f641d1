//! Scalar numeric kernel: Poisson tail probabilities, truncated-Poisson
//! moments, the tilt equation, and the associated large-deviation rate
//! function.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently. All routines are plain `f64`; inputs are capped (Poisson
//! parameters at 500, tail cutoffs at 10^6) so that the stated accuracy
//! holds throughout the accepted domain.

use crate::error::{domain, Result};

/// Largest Poisson parameter accepted by the public entry points.
pub const MAX_POISSON_PARAM: f64 = 500.0;
/// Largest tail cutoff accepted by [`q_tail`].
pub const MAX_TAIL_CUTOFF: u32 = 1_000_000;

/// ln(n!) for n = 0..=30, precomputed to full double precision.
const LN_FACTORIAL_SMALL: [f64; 31] = [
    0.0,
    0.0,
    0.693147180559945309,
    1.79175946922805500,
    3.17805383034794562,
    4.78749174278204599,
    6.57925121201010100,
    8.52516136106541430,
    10.6046029027452502,
    12.8018274800814696,
    15.1044125730755153,
    17.5023078458738858,
    19.9872144956618861,
    22.5521638531234229,
    25.1912211827386815,
    27.8992713838408916,
    30.6718601060806728,
    33.5050734501368889,
    36.3954452080330536,
    39.3398841871994940,
    42.3356164607534850,
    45.3801388984769080,
    48.4711813518352239,
    51.6066755677643736,
    54.7847293981123192,
    58.0036052229805199,
    61.2617017610020020,
    64.5575386270063311,
    67.8897431371815350,
    71.2570389671680090,
    74.6582363488301644,
];

/// Natural log of n!, table lookup below 31 and a Stirling series beyond.
pub fn ln_factorial(n: u64) -> f64 {
    if n <= 30 {
        return LN_FACTORIAL_SMALL[n as usize];
    }
    let x = n as f64;
    let x2 = x * x;
    (x + 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
        - 1.0 / (360.0 * x * x2)
        + 1.0 / (1260.0 * x * x2 * x2)
        - 1.0 / (1680.0 * x * x2 * x2 * x2)
}

fn validate_q_args(x: f64, y: u32) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(domain(format!(
            "Poisson parameter must be finite and >= 0, got {x}"
        )));
    }
    if x > MAX_POISSON_PARAM {
        return Err(domain(format!(
            "Poisson parameter {x} exceeds cap {MAX_POISSON_PARAM}"
        )));
    }
    if y < 1 || y > MAX_TAIL_CUTOFF {
        return Err(domain(format!(
            "tail cutoff {y} outside [1, {MAX_TAIL_CUTOFF}]"
        )));
    }
    Ok(())
}

/// Q(x, y) = Pr[Po(x) >= y] = 1 - e^{-x} * sum_{j<y} x^j/j!.
///
/// The partial sum uses a multiplicative term recursion and is returned
/// directly when the result is large enough to be safe from cancellation;
/// smaller tails are summed on the upper side in log space. The switch
/// sits at 1e-3: a subtraction-from-1 result of size q carries absolute
/// error ~1e-16, i.e. relative error 1e-16/q, so switching well before
/// q reaches rounding-dominated sizes keeps the relative error near
/// machine precision everywhere.
pub fn q_tail(x: f64, y: u32) -> Result<f64> {
    validate_q_args(x, y)?;
    Ok(q_eval(x, y))
}

/// ln Q(x, y); stays accurate where Q itself underflows.
pub fn ln_q_tail(x: f64, y: u32) -> Result<f64> {
    validate_q_args(x, y)?;
    Ok(ln_q_eval(x, y))
}

/// Unvalidated Q evaluation. Also serves internal callers (threshold
/// solvers) whose arguments may exceed the public cap; those stay accurate
/// because every branch taken for large x works in log space or has no
/// cancellation.
pub(crate) fn q_eval(x: f64, y: u32) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if (y as f64) > x {
        if x <= MAX_POISSON_PARAM {
            let direct = q_direct(x, y);
            if direct >= 1e-3 {
                return direct;
            }
        }
        ln_upper_tail(x, y).exp()
    } else if x <= MAX_POISSON_PARAM {
        // mean at or above the cutoff: Q >= 0.3, no cancellation risk
        q_direct(x, y)
    } else {
        1.0 - ln_lower_mass(x, y).exp()
    }
}

pub(crate) fn ln_q_eval(x: f64, y: u32) -> f64 {
    if x == 0.0 {
        return f64::NEG_INFINITY;
    }
    if (y as f64) > x {
        if x <= MAX_POISSON_PARAM {
            let direct = q_direct(x, y);
            if direct >= 1e-3 {
                return direct.ln();
            }
        }
        ln_upper_tail(x, y)
    } else {
        q_eval(x, y).ln()
    }
}

/// 1 - e^{-x} sum_{j<y} x^j/j!; the sum is truncated once terms are past
/// the mode and below 1e-20 of the running total.
fn q_direct(x: f64, y: u32) -> f64 {
    let mut sum = 0.0f64;
    let mut term = 1.0f64;
    for j in 0..y {
        sum += term;
        let jf = j as f64;
        if jf > x && term < sum * 1e-20 {
            break;
        }
        term *= x / (jf + 1.0);
    }
    (1.0 - (-x).exp() * sum).clamp(0.0, 1.0)
}

/// ln of e^{-x} sum_{j>=y} x^j/j!, valid for y > x (terms decrease).
fn ln_upper_tail(x: f64, y: u32) -> f64 {
    let yf = y as f64;
    let ln_lead = -x + yf * x.ln() - ln_factorial(y as u64);
    let mut factor = 1.0f64;
    let mut term = 1.0f64;
    let mut j = yf + 1.0;
    loop {
        term *= x / j;
        factor += term;
        if term < factor * 1e-20 {
            break;
        }
        j += 1.0;
    }
    ln_lead + factor.ln()
}

/// ln of e^{-x} sum_{j<y} x^j/j!, valid for y <= x (terms decrease when
/// walked downward from j = y-1).
fn ln_lower_mass(x: f64, y: u32) -> f64 {
    let top = (y - 1) as f64;
    let ln_lead = -x + top * x.ln() - ln_factorial((y - 1) as u64);
    let mut factor = 1.0f64;
    let mut term = 1.0f64;
    let mut j = top;
    while j >= 1.0 {
        term *= j / x;
        factor += term;
        if term < factor * 1e-20 {
            break;
        }
        j -= 1.0;
    }
    ln_lead + factor.ln()
}

/// Amount by which the (ell+1)-truncated Poisson mean exceeds its parameter:
/// x * Q(x,ell) / Q(x,ell+1) = x + mean_gap(x, ell).
///
/// Computed as x / S with S = sum_{i>=1} x^i / ((ell+1)...(ell+i)), a series
/// of positive terms; this form has no cancellation and tends to ell+1
/// exactly as x -> 0, which the Q-ratio form cannot deliver in doubles.
pub(crate) fn mean_gap(x: f64, ell: u32) -> f64 {
    debug_assert!(x > 0.0);
    let el = ell as f64;
    let mut s = 0.0f64;
    let mut term = 1.0f64;
    let mut i = 1.0f64;
    loop {
        term *= x / (el + i);
        s += term;
        if term < s * 1e-18 && x < el + i {
            break;
        }
        if s > 1e250 {
            // gap below any representable resolution of callers
            break;
        }
        i += 1.0;
    }
    x / s
}

/// Parameters of an (ell+1)-truncated Poisson variable: Poisson(lambda)
/// conditioned on being at least ell+1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncPoisParams {
    lambda: f64,
    ell: u32,
}

/// One evaluation of the rate function: the point z, the tilt T_z solving
/// z = T Q(T,ell)/Q(T,ell+1), and the value I_lambda(z). At the left
/// boundary z = ell+1 the tilt degenerates to 0 and `t_z` is stored as 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFnPoint {
    pub z: f64,
    pub t_z: f64,
    pub value: f64,
}

impl TruncPoisParams {
    pub fn new(lambda: f64, ell: u32) -> Result<Self> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(domain(format!(
                "lambda must be finite and > 0, got {lambda}"
            )));
        }
        if lambda > MAX_POISSON_PARAM {
            return Err(domain(format!(
                "lambda {lambda} exceeds cap {MAX_POISSON_PARAM}"
            )));
        }
        if ell < 1 || ell >= MAX_TAIL_CUTOFF {
            return Err(domain(format!(
                "ell {ell} outside [1, {}]",
                MAX_TAIL_CUTOFF - 1
            )));
        }
        Ok(Self { lambda, ell })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Truncation cutoff ell+1 as a float.
    pub fn cutoff(&self) -> f64 {
        (self.ell + 1) as f64
    }

    /// Mean lambda * Q(lambda,ell) / Q(lambda,ell+1); strictly above ell+1.
    pub fn mean(&self) -> f64 {
        self.lambda + mean_gap(self.lambda, self.ell)
    }

    /// The unique T_z > 0 with z = T_z Q(T_z,ell)/Q(T_z,ell+1), by bracketed
    /// bisection on the strictly increasing left-hand side.
    pub fn tilt(&self, z: f64) -> Result<f64> {
        if !z.is_finite() || z <= self.cutoff() {
            return Err(domain(format!(
                "tilt point z = {z} must exceed the truncation cutoff {}",
                self.cutoff()
            )));
        }
        Ok(solve_tilt(z, self.ell))
    }

    /// Rate function value
    /// I(z) = z (ln T_z - ln lambda) - T_z + lambda - ln Q(T_z,ell+1) + ln Q(lambda,ell+1),
    /// with the z = ell+1 boundary routed to the closed form.
    pub fn rate_fn(&self, z: f64) -> Result<RateFnPoint> {
        let cut = self.cutoff();
        if !z.is_finite() || z < cut {
            return Err(domain(format!(
                "rate function point z = {z} below cutoff {cut}"
            )));
        }
        if z == cut {
            return Ok(RateFnPoint {
                z,
                t_z: 0.0,
                value: self.rate_fn_boundary(),
            });
        }
        let t = solve_tilt(z, self.ell);
        let value = z * (t.ln() - self.lambda.ln()) - t + self.lambda - ln_q_eval(t, self.ell + 1)
            + ln_q_eval(self.lambda, self.ell + 1);
        Ok(RateFnPoint { z, t_z: t, value })
    }

    /// Closed form of the boundary value
    /// I(ell+1) = ln (ell+1)! - (ell+1) ln lambda + lambda + ln Q(lambda,ell+1);
    /// equals -ln Pr[X = ell+1] for the truncated variable.
    pub fn rate_fn_boundary(&self) -> f64 {
        let cut = (self.ell + 1) as u64;
        ln_factorial(cut) - cut as f64 * self.lambda.ln()
            + self.lambda
            + ln_q_eval(self.lambda, self.ell + 1)
    }
}

pub(crate) fn solve_tilt(z: f64, ell: u32) -> f64 {
    let g = |t: f64| t + mean_gap(t, ell);
    let mut lo = 1e-9f64;
    while g(lo) >= z {
        lo /= 16.0;
        if lo < 1e-300 {
            break;
        }
    }
    let mut hi = z.max(1.0); // g(t) > t, so g(hi) >= g(z) > z
    debug_assert!(g(hi) >= z); // gap can round to zero for large z
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < z {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Natural-log entropy H(x) = -x ln x - (1-x) ln(1-x), extended by
/// continuity to 0 at the endpoints.
pub fn entropy(x: f64) -> Result<f64> {
    if x.is_nan() || !(0.0..=1.0).contains(&x) {
        return Err(domain(format!("entropy argument {x} outside [0, 1]")));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.ln() - (1.0 - x) * (1.0 - x).ln())
}

/// Truncated-Poisson pmf at the cutoff ell+1, computed from tail
/// differences: (Q(lambda,ell+1) - Q(lambda,ell+2)) / Q(lambda,ell+1).
/// Exposed for audits against exp(-rate_fn_boundary).
pub fn trunc_pmf_at_cutoff(p: &TruncPoisParams) -> f64 {
    let a = q_eval(p.lambda(), p.ell() + 1);
    let b = q_eval(p.lambda(), p.ell() + 2);
    (a - b) / a
}

/// Poisson pmf e^{-x} x^j / j!, evaluated in log space.
pub fn poisson_pmf(x: f64, j: u64) -> f64 {
    (-x + j as f64 * x.ln() - ln_factorial(j)).exp()
}
