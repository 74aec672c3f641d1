//! Exact ell-orientation of a hypergraph by capacitated bipartite
//! matching: edges on the left, vertices with capacity ell on the right,
//! one link per distinct (edge, vertex) incidence. An edge is assigned to
//! a vertex, not to an occurrence, so a vertex appearing twice in an edge
//! still yields a single link and a single unit of consumed capacity.
//!
//! The matching runs phase-based shortest augmenting paths (Hopcroft-Karp
//! generalized to vertex capacities through residual load counts). When
//! the matching is not left-perfect, the edges reachable from the
//! unmatched ones by alternating search form a Hall violator, returned as
//! the certificate.

use crate::hypergraph::Hypergraph;
use crate::peel::peel_with_trace;
use std::collections::VecDeque;

const UNASSIGNED: u32 = u32::MAX;
const INF: u32 = u32::MAX;

/// A witnessing ell-orientation: the chosen vertex of each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub assignment: Vec<u32>,
}

/// Certificate of non-orientability: an edge set whose edges outnumber
/// the ell-capacity of the vertices they touch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallWitness {
    /// indices of the violating edge set, ascending
    pub edges: Vec<usize>,
    /// vertices touched by those edges, ascending
    pub vertices: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientDecision {
    Orientable(Orientation),
    NotOrientable(HallWitness),
}

impl OrientDecision {
    pub fn is_orientable(&self) -> bool {
        matches!(self, OrientDecision::Orientable(_))
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            OrientDecision::Orientable(o) => Some(o),
            OrientDecision::NotOrientable(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&HallWitness> {
        match self {
            OrientDecision::Orientable(_) => None,
            OrientDecision::NotOrientable(w) => Some(w),
        }
    }
}

/// True when `o` assigns every edge to one of its own vertices with no
/// vertex over capacity.
pub fn verify_orientation(h: &Hypergraph, ell: u32, o: &Orientation) -> bool {
    if o.assignment.len() != h.m() {
        return false;
    }
    let mut load = vec![0u32; h.n()];
    for (i, &v) in o.assignment.iter().enumerate() {
        if !h.edge(i).contains(&v) {
            return false;
        }
        load[v as usize] += 1;
    }
    load.iter().all(|&l| l <= ell)
}

struct Matcher<'a> {
    h: &'a Hypergraph,
    ell: u32,
    /// distinct vertices of each edge (flat, with offsets)
    adj: Vec<u32>,
    off: Vec<u32>,
    assigned: Vec<u32>,
    load: Vec<u32>,
    vtx_edges: Vec<Vec<u32>>,
    dist: Vec<u32>,
    vmark: Vec<u32>,
    phase: u32,
}

impl<'a> Matcher<'a> {
    fn new(h: &'a Hypergraph, ell: u32) -> Self {
        let m = h.m();
        let mut adj = Vec::with_capacity(m * h.k());
        let mut off = Vec::with_capacity(m + 1);
        off.push(0u32);
        for e in h.edges() {
            // edges are stored sorted, so distinct vertices are a dedup run
            let mut prev = u32::MAX;
            for &v in e {
                if v != prev {
                    adj.push(v);
                    prev = v;
                }
            }
            off.push(adj.len() as u32);
        }
        Matcher {
            h,
            ell,
            adj,
            off,
            assigned: vec![UNASSIGNED; m],
            load: vec![0; h.n()],
            vtx_edges: vec![Vec::new(); h.n()],
            dist: vec![INF; m],
            vmark: vec![u32::MAX; h.n()],
            phase: 0,
        }
    }

    fn edge_vertices(&self, e: usize) -> &[u32] {
        &self.adj[self.off[e] as usize..self.off[e + 1] as usize]
    }

    /// Greedy seeding: assign each edge to its first free vertex.
    fn greedy_init(&mut self) {
        for e in 0..self.h.m() {
            let pick = self
                .edge_vertices(e)
                .iter()
                .copied()
                .find(|&v| self.load[v as usize] < self.ell);
            if let Some(v) = pick {
                self.assigned[e] = v;
                self.load[v as usize] += 1;
                self.vtx_edges[v as usize].push(e as u32);
            }
        }
    }

    /// Layered BFS from unassigned edges. Returns true when some free
    /// vertex capacity is reachable.
    fn bfs(&mut self) -> bool {
        self.phase += 1;
        let mut queue = VecDeque::new();
        for e in 0..self.h.m() {
            if self.assigned[e] == UNASSIGNED {
                self.dist[e] = 0;
                queue.push_back(e as u32);
            } else {
                self.dist[e] = INF;
            }
        }
        let mut found = false;
        while let Some(e) = queue.pop_front() {
            let e = e as usize;
            let d = self.dist[e];
            for i in self.off[e]..self.off[e + 1] {
                let v = self.adj[i as usize] as usize;
                if self.vmark[v] == self.phase {
                    continue;
                }
                self.vmark[v] = self.phase;
                if self.load[v] < self.ell {
                    found = true;
                } else {
                    for &e2 in &self.vtx_edges[v] {
                        let e2 = e2 as usize;
                        if self.dist[e2] == INF {
                            self.dist[e2] = d + 1;
                            queue.push_back(e2 as u32);
                        }
                    }
                }
            }
        }
        found
    }

    /// Depth-first augmentation along strictly increasing BFS layers.
    fn dfs(&mut self, e: usize) -> bool {
        let d = self.dist[e];
        for i in self.off[e] as usize..self.off[e + 1] as usize {
            let v = self.adj[i] as usize;
            if self.load[v] < self.ell {
                self.assigned[e] = v as u32;
                self.load[v] += 1;
                self.vtx_edges[v].push(e as u32);
                return true;
            }
        }
        for i in self.off[e] as usize..self.off[e + 1] as usize {
            let v = self.adj[i] as usize;
            let candidates: Vec<u32> = self.vtx_edges[v]
                .iter()
                .copied()
                .filter(|&e2| self.dist[e2 as usize] == d + 1)
                .collect();
            for e2 in candidates {
                if self.assigned[e2 as usize] != v as u32 {
                    continue; // moved by a nested augmentation
                }
                if self.dfs(e2 as usize) {
                    let pos = self.vtx_edges[v].iter().position(|&x| x == e2).unwrap();
                    self.vtx_edges[v].swap_remove(pos);
                    self.assigned[e] = v as u32;
                    self.vtx_edges[v].push(e as u32);
                    return true;
                }
            }
        }
        self.dist[e] = INF;
        false
    }

    fn solve(mut self) -> OrientDecision {
        self.greedy_init();
        while self.bfs() {
            for e in 0..self.h.m() {
                if self.assigned[e] == UNASSIGNED && self.dist[e] == 0 {
                    self.dfs(e);
                }
            }
        }
        if self.assigned.iter().all(|&a| a != UNASSIGNED) {
            let o = Orientation {
                assignment: self.assigned,
            };
            debug_assert!(verify_orientation(self.h, self.ell, &o));
            return OrientDecision::Orientable(o);
        }
        // final BFS left dist set exactly on the alternating-reachable set
        let edges: Vec<usize> = (0..self.h.m()).filter(|&e| self.dist[e] != INF).collect();
        let mut seen = vec![false; self.h.n()];
        for &e in &edges {
            for &v in self.edge_vertices(e) {
                seen[v as usize] = true;
            }
        }
        let vertices: Vec<u32> = (0..self.h.n() as u32)
            .filter(|&v| seen[v as usize])
            .collect();
        debug_assert!(edges.len() as u64 > self.ell as u64 * vertices.len() as u64);
        OrientDecision::NotOrientable(HallWitness { edges, vertices })
    }
}

/// Decide ell-orientability by maximum matching on the whole hypergraph.
pub fn orient(h: &Hypergraph, ell: u32) -> OrientDecision {
    assert!(ell >= 1, "capacity ell must be >= 1");
    if h.m() == 0 {
        return OrientDecision::Orientable(Orientation {
            assignment: Vec::new(),
        });
    }
    Matcher::new(h, ell).solve()
}

/// Orient through the (ell+1)-core: only the core needs matching, and
/// edges deleted during peeling go greedily to the vertex whose removal
/// deleted them (such a vertex had degree at most ell when removed). The
/// assembled assignment is re-validated; any defect falls back to
/// whole-graph matching.
pub fn orient_with_peeling(h: &Hypergraph, ell: u32) -> OrientDecision {
    assert!(ell >= 1, "capacity ell must be >= 1");
    let (core, trace) = peel_with_trace(h, ell);
    if core.edge_indices.is_empty() {
        let mut assignment = vec![UNASSIGNED; h.m()];
        for (v, killed) in &trace.removals {
            for &e in killed {
                assignment[e] = *v;
            }
        }
        let o = Orientation { assignment };
        if verify_orientation(h, ell, &o) {
            return OrientDecision::Orientable(o);
        }
        return orient(h, ell);
    }
    let sub_edges: Vec<Vec<u32>> = core
        .edge_indices
        .iter()
        .map(|&i| h.edge(i).to_vec())
        .collect();
    let sub = Hypergraph::from_edges(h.n(), h.k(), &sub_edges)
        .expect("core subgraph is structurally valid");
    match orient(&sub, ell) {
        OrientDecision::NotOrientable(w) => {
            let edges: Vec<usize> = w.edges.iter().map(|&i| core.edge_indices[i]).collect();
            OrientDecision::NotOrientable(HallWitness {
                edges,
                vertices: w.vertices,
            })
        }
        OrientDecision::Orientable(sub_o) => {
            let mut assignment = vec![UNASSIGNED; h.m()];
            for (si, &orig) in core.edge_indices.iter().enumerate() {
                assignment[orig] = sub_o.assignment[si];
            }
            for (v, killed) in &trace.removals {
                for &e in killed {
                    assignment[e] = *v;
                }
            }
            let o = Orientation { assignment };
            if verify_orientation(h, ell, &o) {
                OrientDecision::Orientable(o)
            } else {
                orient(h, ell)
            }
        }
    }
}
