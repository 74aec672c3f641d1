//! Exact density machinery on small instances: exhaustive densest-subset
//! search and the maximal-dense-set structure check. Densities are exact
//! rationals throughout; nothing here compares floats to ell.

use crate::error::{Error, Result};
use crate::hypergraph::{Density, Hypergraph};

/// Number of vertices above which subset enumeration is refused.
pub const MAX_EXACT_VERTICES: usize = 24;

/// An ell-dense vertex set found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseWitness {
    /// the vertex set, ascending
    pub vertices: Vec<u32>,
    /// edges fully inside the set
    pub edge_count: u64,
    pub density: Density,
    /// edge_count - ell * |vertices|; lies in [0, ell) for maximal
    /// witnesses of subcritical hypergraphs
    pub theta: i64,
}

/// Result of checking one vertex set for maximal ell-density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalDenseReport {
    pub is_dense: bool,
    /// dense, and no one-vertex extension stays dense
    pub is_maximal: bool,
    pub theta: i64,
    /// the structural conclusions were applicable (maximal set in an
    /// ambient hypergraph of density below ell) and were verified
    pub proposition_checked: bool,
    pub proposition_ok: bool,
    pub violation: Option<String>,
}

fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

fn expand_mask(mask: u32) -> Vec<u32> {
    (0..32).filter(|&b| mask >> b & 1 == 1).collect()
}

/// Exhaustive search for the densest vertex set of density at least ell.
/// Ties break toward smaller vertex sets, then lexicographically smaller
/// sorted vertex lists. Returns None when no ell-dense set exists.
pub fn densest_subset_exact(h: &Hypergraph, ell: u32) -> Result<Option<DenseWitness>> {
    if h.n() > MAX_EXACT_VERTICES {
        return Err(Error::Size(format!(
            "exhaustive subset search capped at {MAX_EXACT_VERTICES} vertices, got {}",
            h.n()
        )));
    }
    let masks = edge_masks(h);
    let mut best: Option<(Density, u32, u32)> = None; // density, popcount, mask
    for subset in 1u32..(1u32 << h.n()) {
        let e = masks.iter().filter(|&&em| em & !subset == 0).count() as u64;
        let v = subset.count_ones();
        let d = Density::new(e, v as u64);
        if !d.at_least(ell) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bd, bv, bm)) => {
                d > *bd
                    || (d == *bd && v < *bv)
                    || (d == *bd && v == *bv && expand_mask(subset) < expand_mask(*bm))
            }
        };
        if better {
            best = Some((d, v, subset));
        }
    }
    Ok(best.map(|(density, _, mask)| {
        let vertices = expand_mask(mask);
        let edge_count = density.edges;
        let theta = edge_count as i64 - ell as i64 * vertices.len() as i64;
        DenseWitness {
            vertices,
            edge_count,
            density,
            theta,
        }
    }))
}

/// Brute-force reference for the orientability decision: a hypergraph is
/// ell-orientable iff every vertex subset U keeps e_U <= ell |U| (Hall's
/// condition collapsed over edge sets with equal coverage). Exponential in
/// n; capped at 24 vertices. Independent of the matching path.
pub fn orientable_brute_force(h: &Hypergraph, ell: u32) -> Result<bool> {
    if h.n() > MAX_EXACT_VERTICES {
        return Err(Error::Size(format!(
            "brute-force orientability capped at {MAX_EXACT_VERTICES} vertices, got {}",
            h.n()
        )));
    }
    let masks = edge_masks(h);
    for subset in 1u32..(1u32 << h.n()) {
        let e = masks.iter().filter(|&&em| em & !subset == 0).count() as u64;
        if e > ell as u64 * subset.count_ones() as u64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edges fully inside `inside` (as a membership bitmap over all vertices).
fn edges_inside(h: &Hypergraph, inside: &[bool]) -> u64 {
    h.edges()
        .filter(|e| e.iter().all(|&v| inside[v as usize]))
        .count() as u64
}

/// Number of edges containing `v` whose other vertices all lie in U.
fn degree_into(h: &Hypergraph, inside: &[bool], v: u32) -> u64 {
    h.edges()
        .filter(|e| e.contains(&v) && e.iter().all(|&u| u == v || inside[u as usize]))
        .count() as u64
}

/// Check whether U is a maximal ell-dense set, and when the ambient
/// density is below ell additionally verify the structural conclusions:
/// theta = e_U - ell*v_U lies in [0, ell), and every outside vertex has
/// degree into U below ell - theta.
pub fn maximal_dense_check(h: &Hypergraph, subset: &[u32], ell: u32) -> MaximalDenseReport {
    assert!(!subset.is_empty(), "subset must be nonempty");
    let mut inside = vec![false; h.n()];
    for &v in subset {
        inside[v as usize] = true;
    }
    let v_count = subset.len() as u64;
    let e_count = edges_inside(h, &inside);
    let density = Density::new(e_count, v_count);
    let theta = e_count as i64 - ell as i64 * v_count as i64;
    let is_dense = density.at_least(ell);
    let mut is_maximal = is_dense;
    if is_dense {
        for v in 0..h.n() as u32 {
            if inside[v as usize] {
                continue;
            }
            let extended = e_count + degree_into(h, &inside, v);
            if Density::new(extended, v_count + 1).at_least(ell) {
                is_maximal = false;
                break;
            }
        }
    }
    let ambient_subcritical =
        Density::new(h.m() as u64, h.n() as u64) < Density::new(ell as u64, 1);
    let proposition_checked = is_maximal && ambient_subcritical && (h.n() as u64) > v_count;
    let mut violation = None;
    if proposition_checked {
        if theta < 0 || theta >= ell as i64 {
            violation = Some(format!("theta = {theta} outside [0, {ell})"));
        } else {
            for v in 0..h.n() as u32 {
                if inside[v as usize] {
                    continue;
                }
                let d = degree_into(h, &inside, v) as i64;
                if d >= ell as i64 - theta {
                    violation = Some(format!("outside vertex {v} has degree {d} >= ell - theta"));
                    break;
                }
            }
        }
    }
    MaximalDenseReport {
        is_dense,
        is_maximal,
        theta,
        proposition_checked,
        proposition_ok: violation.is_none(),
        violation,
    }
}
