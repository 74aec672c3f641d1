//! (ell+1)-core peeling: repeatedly delete vertices of degree at most ell
//! together with their incident edges.
//!
//! Degrees count occurrence multiplicity (a vertex appearing twice in one
//! edge gains 2); the simple models never exercise this, cloning output
//! does. The removal queue is FIFO; the core itself is order-independent.

use crate::hypergraph::{Density, Hypergraph};
use std::collections::VecDeque;

/// The (ell+1)-core of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreReport {
    /// core vertices, ascending
    pub vertices: Vec<u32>,
    /// indices of edges fully inside the core, ascending
    pub edge_indices: Vec<usize>,
    /// degree of each core vertex within the core, aligned with `vertices`
    pub degrees: Vec<u32>,
    /// exact edges/vertices ratio of the core
    pub density: Density,
}

impl CoreReport {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Removal order recorded during peeling: each entry is a removed vertex
/// together with the edges its removal deleted. Every deleted edge
/// contains its remover, and a remover kills at most ell edges, which is
/// what makes greedy orientation of the non-core part valid.
#[derive(Debug, Clone, Default)]
pub struct PeelTrace {
    pub removals: Vec<(u32, Vec<usize>)>,
}

/// Compute the (ell+1)-core.
pub fn peel_core(h: &Hypergraph, ell: u32) -> CoreReport {
    peel_with_trace(h, ell).0
}

/// Core plus the removal trace used by the fast orientation path.
pub fn peel_with_trace(h: &Hypergraph, ell: u32) -> (CoreReport, PeelTrace) {
    let n = h.n();
    let m = h.m();
    let mut degree = h.degrees();
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, e) in h.edges().enumerate() {
        for &v in e {
            incident[v as usize].push(i as u32);
        }
    }
    let mut removed = vec![false; n];
    let mut edge_alive = vec![true; m];
    let mut queue: VecDeque<u32> = (0..n as u32)
        .filter(|&v| degree[v as usize] <= ell)
        .collect();
    let mut trace = PeelTrace::default();
    while let Some(v) = queue.pop_front() {
        let v = v as usize;
        if removed[v] {
            continue;
        }
        removed[v] = true;
        let mut killed = Vec::new();
        for &ei in &incident[v] {
            let ei = ei as usize;
            if !edge_alive[ei] {
                continue;
            }
            edge_alive[ei] = false;
            killed.push(ei);
            for &u in h.edge(ei) {
                let u = u as usize;
                degree[u] -= 1;
                if !removed[u] && degree[u] == ell {
                    queue.push_back(u as u32);
                }
            }
        }
        trace.removals.push((v as u32, killed));
    }
    let vertices: Vec<u32> = (0..n as u32).filter(|&v| !removed[v as usize]).collect();
    let degrees: Vec<u32> = vertices.iter().map(|&v| degree[v as usize]).collect();
    let edge_indices: Vec<usize> = (0..m).filter(|&i| edge_alive[i]).collect();
    let density = Density::new(edge_indices.len() as u64, vertices.len() as u64);
    (
        CoreReport {
            vertices,
            edge_indices,
            degrees,
            density,
        },
        trace,
    )
}

/// Brute-force reference for the (ell+1)-core: the union of all vertex
/// sets whose induced sub-hypergraph has minimum degree at least ell+1
/// (closed under union, so the union is the maximum such set). Exponential
/// in n; capped at 24 vertices. Independent of the peeling path.
pub fn core_brute_force(h: &Hypergraph, ell: u32) -> Option<Vec<u32>> {
    if h.n() > crate::dense::MAX_EXACT_VERTICES {
        return None;
    }
    let masks: Vec<u32> = h
        .edges()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut best = 0u32;
    for subset in 1u32..(1u32 << h.n()) {
        let mut deg = vec![0u32; h.n()];
        for (i, em) in masks.iter().enumerate() {
            if em & !subset == 0 {
                for &v in h.edge(i) {
                    deg[v as usize] += 1;
                }
            }
        }
        let ok = (0..h.n()).all(|v| subset >> v & 1 == 0 || deg[v] >= ell + 1);
        if ok {
            best |= subset;
        }
    }
    Some((0..h.n() as u32).filter(|&v| best >> v & 1 == 1).collect())
}
