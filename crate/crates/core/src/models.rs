//! Random hypergraph models: uniform H(n,m,k), binomial H(n,p,k), the
//! configuration/cloning model from a degree sequence, and the Poisson
//! cloning model. All models are pure functions of (arguments, seed).

use crate::error::{argument, Result};
use crate::hypergraph::Hypergraph;
use crate::kernel::q_eval;
use crate::kernel::TruncPoisParams;
use crate::rng::{Seed, SeededRng};
use std::collections::HashSet;

/// Vertex degrees d_1..d_N for the cloning model. The sum need not be a
/// multiple of k; leftover clones are discarded and counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<u32>);

impl DegreeSequence {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }
}

/// C(n, k) in exact integer arithmetic; None on u128 overflow.
pub fn binomial_coefficient(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(c)
}

const MAX_EXPECTED_EDGES: f64 = 1e8;
const MAX_REJECTIONS: u32 = 1_000_000;

fn validate_nk(n: usize, k: usize) -> Result<()> {
    if k < 3 {
        return Err(argument(format!("edge size k must be >= 3, got {k}")));
    }
    if n < k {
        return Err(argument(format!("need n >= k, got n={n}, k={k}")));
    }
    if n > u32::MAX as usize {
        return Err(argument("vertex count exceeds u32 range"));
    }
    Ok(())
}

/// Uniform k-subset of [0, n) by Floyd's algorithm, returned sorted.
fn floyd_subset(rng: &mut SeededRng, n: usize, k: usize, out: &mut Vec<u32>) {
    out.clear();
    for j in (n - k)..n {
        let t = rng.below(j as u64 + 1) as u32;
        if out.contains(&t) {
            out.push(j as u32);
        } else {
            out.push(t);
        }
    }
    out.sort_unstable();
}

fn distinct_edges(rng: &mut SeededRng, n: usize, m: usize, k: usize) -> Result<Hypergraph> {
    let mut h = Hypergraph::with_capacity(n, k, m);
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(m * 2);
    let mut edge = Vec::with_capacity(k);
    let mut consecutive_rejects = 0u32;
    while seen.len() < m {
        floyd_subset(rng, n, k, &mut edge);
        if seen.insert(edge.clone()) {
            h.push_edge(&mut edge);
            consecutive_rejects = 0;
        } else {
            consecutive_rejects += 1;
            if consecutive_rejects > MAX_REJECTIONS {
                return Err(argument(
                    "duplicate-edge rejection loop exceeded 10^6 tries",
                ));
            }
        }
    }
    Ok(h)
}

/// H(n, m, k): m distinct k-subsets, uniform over simple hypergraphs with
/// m distinct edges (duplicates are resampled).
pub fn gen_uniform(n: usize, m: usize, k: usize, seed: Seed) -> Result<Hypergraph> {
    validate_nk(n, k)?;
    let total = binomial_coefficient(n, k);
    if let Some(t) = total {
        if (m as u128) > t {
            return Err(argument(format!("m = {m} exceeds C({n},{k}) = {t}")));
        }
    }
    let mut rng = SeededRng::new(seed);
    distinct_edges(&mut rng, n, m, k)
}

/// H(n, p, k): each k-subset present independently with probability p.
/// Implemented by sampling the edge count Binomial(C(n,k), p) and then
/// that many distinct uniform k-subsets, which is equivalent in
/// distribution.
pub fn gen_binomial(n: usize, p: f64, k: usize, seed: Seed) -> Result<Hypergraph> {
    validate_nk(n, k)?;
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(argument(format!("edge probability p = {p} outside [0, 1]")));
    }
    let total = binomial_coefficient(n, k)
        .ok_or_else(|| argument("C(n,k) exceeds 128-bit range; reduce n or k"))?;
    let mean = p * total as f64;
    if mean > MAX_EXPECTED_EDGES {
        return Err(argument(format!(
            "expected edge count {mean:.3e} exceeds cap 1e8"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let m = sample_binomial(&mut rng, total, p);
    distinct_edges(&mut rng, n, m as usize, k)
}

/// Configuration/cloning model: each vertex contributes degree-many
/// clones, the clones are matched into uniformly random k-blocks, and
/// blocks project to (possibly multiset) edges. When the clone count is
/// not a multiple of k the final leftover clones are discarded and the
/// count recorded on the result.
pub fn gen_cloning(degrees: &DegreeSequence, k: usize, seed: Seed) -> Result<Hypergraph> {
    if k < 3 {
        return Err(argument(format!("edge size k must be >= 3, got {k}")));
    }
    if degrees.0.len() > u32::MAX as usize {
        return Err(argument("vertex count exceeds u32 range"));
    }
    let mut rng = SeededRng::new(seed);
    Ok(clone_and_project(degrees, k, &mut rng))
}

fn clone_and_project(degrees: &DegreeSequence, k: usize, rng: &mut SeededRng) -> Hypergraph {
    let n = degrees.0.len();
    let total = degrees.total() as usize;
    let mut clones: Vec<u32> = Vec::with_capacity(total);
    for (v, &d) in degrees.0.iter().enumerate() {
        clones.extend(std::iter::repeat(v as u32).take(d as usize));
    }
    rng.shuffle(&mut clones);
    let m = clones.len() / k;
    let discarded = clones.len() - m * k;
    let mut h = Hypergraph::with_capacity(n, k, m);
    for i in 0..m {
        let mut edge: Vec<u32> = clones[i * k..(i + 1) * k].to_vec();
        h.push_edge(&mut edge);
    }
    h.simple = false;
    h.discarded_clones = discarded;
    h
}

/// Poisson cloning model: n vertices with i.i.d. Poisson(lambda) degrees,
/// lambda = p * C(n-1, k-1), then the cloning construction.
pub fn gen_poisson_cloning(n: usize, p: f64, k: usize, seed: Seed) -> Result<Hypergraph> {
    validate_nk(n, k)?;
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(argument(format!("edge probability p = {p} outside [0, 1]")));
    }
    let per_vertex = binomial_coefficient(n - 1, k - 1)
        .ok_or_else(|| argument("C(n-1,k-1) exceeds 128-bit range; reduce n or k"))?;
    let lambda = p * per_vertex as f64;
    if lambda * n as f64 / k as f64 > MAX_EXPECTED_EDGES {
        return Err(argument("expected edge count exceeds cap 1e8"));
    }
    let mut rng = SeededRng::new(seed);
    let degrees = DegreeSequence(
        (0..n)
            .map(|_| sample_poisson(&mut rng, lambda).min(u32::MAX as u64) as u32)
            .collect(),
    );
    Ok(clone_and_project(&degrees, k, &mut rng))
}

/// i.i.d. draws of Poisson(lambda) conditioned on being at least ell+1,
/// by rejection from Poisson(lambda). Rejects parameters whose acceptance
/// probability Q(lambda, ell+1) is below 1e-6.
pub fn sample_trunc_pois(p: &TruncPoisParams, count: usize, seed: Seed) -> Result<Vec<u64>> {
    let accept = q_eval(p.lambda(), p.ell() + 1);
    if accept < 1e-6 {
        return Err(argument(format!(
            "acceptance probability {accept:.3e} too small for rejection sampling"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let cut = (p.ell() + 1) as u64;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        for attempt in 0.. {
            let x = sample_poisson(&mut rng, p.lambda());
            if x >= cut {
                out.push(x);
                break;
            }
            assert!(attempt < MAX_REJECTIONS, "rejection sampler stalled");
        }
    }
    Ok(out)
}

/// Exact Poisson sampling: Knuth's product method on chunks of parameter
/// at most 30 (Poisson additivity keeps this exact for any lambda while
/// avoiding e^{-lambda} underflow).
pub(crate) fn sample_poisson(rng: &mut SeededRng, lambda: f64) -> u64 {
    debug_assert!(lambda >= 0.0);
    let mut total = 0u64;
    let mut rem = lambda;
    while rem > 30.0 {
        total += poisson_knuth(rng, 30.0);
        rem -= 30.0;
    }
    total + poisson_knuth(rng, rem)
}

fn poisson_knuth(rng: &mut SeededRng, lambda: f64) -> u64 {
    if lambda <= 0.0 {
        return 0;
    }
    let limit = (-lambda).exp();
    let mut k = 0u64;
    let mut p = 1.0f64;
    loop {
        p *= rng.next_f64();
        if p <= limit {
            return k;
        }
        k += 1;
    }
}

/// Exact Binomial(n, p) sampling by sequential inversion on chunks with
/// mean at most 30 (binomial additivity over disjoint trial blocks). No
/// normal approximation anywhere.
pub(crate) fn sample_binomial(rng: &mut SeededRng, n: u128, p: f64) -> u64 {
    if n == 0 || p <= 0.0 {
        return 0;
    }
    if p >= 1.0 {
        return n as u64;
    }
    let chunk = ((30.0 / p).ceil() as u128).max(1);
    let mut remaining = n;
    let mut total = 0u64;
    while remaining > 0 {
        let take = remaining.min(chunk);
        total += binomial_inversion(rng, take, p);
        remaining -= take;
    }
    total
}

fn binomial_inversion(rng: &mut SeededRng, n: u128, p: f64) -> u64 {
    let nf = n as f64;
    let mut pmf = (nf * (1.0 - p).ln()).exp(); // (1-p)^n
    let ratio = p / (1.0 - p);
    let u = rng.next_f64();
    let mut cdf = pmf;
    let mut j = 0u64;
    // mean <= 30, so the walk is short; cap at 4000 against the
    // ~1e-16 cdf shortfall of accumulated rounding
    while u > cdf && j < 4000 && (j as u128) < n {
        j += 1;
        pmf *= (nf - (j - 1) as f64) / j as f64 * ratio;
        cdf += pmf;
    }
    j
}
