//! Hypergraph storage and the shared text format.
//!
//! Edges are stored flat with stride k and canonicalized to sorted vertex
//! tuples. Simple-model output carries `simple == true`; cloning-model
//! output may repeat vertices within an edge and repeat whole edges, and
//! records how many clones were discarded when the degree sum was not a
//! multiple of k.

use crate::error::{argument, Error, Result};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    data: Vec<u32>,
    /// true when produced by (or parsed as) a simple model: distinct
    /// vertices per edge, distinct edges
    pub simple: bool,
    /// clones left unmatched and dropped by the cloning model
    pub discarded_clones: usize,
}

impl Hypergraph {
    pub(crate) fn with_capacity(n: usize, k: usize, m: usize) -> Self {
        Hypergraph {
            n,
            k,
            data: Vec::with_capacity(m * k),
            simple: true,
            discarded_clones: 0,
        }
    }

    /// Build from explicit edges, validating sizes and vertex ranges.
    /// Edges are canonicalized to sorted tuples.
    pub fn from_edges(n: usize, k: usize, edges: &[Vec<u32>]) -> Result<Self> {
        if k < 1 {
            return Err(argument("edge size k must be >= 1"));
        }
        if n > u32::MAX as usize {
            return Err(argument("vertex count exceeds u32 range"));
        }
        let mut h = Hypergraph::with_capacity(n, k, edges.len());
        for e in edges {
            if e.len() != k {
                return Err(argument(format!("edge {e:?} does not have {k} entries")));
            }
            if e.iter().any(|&v| v as usize >= n) {
                return Err(argument(format!(
                    "edge {e:?} has vertices outside [0, {n})"
                )));
            }
            let mut e = e.clone();
            e.sort_unstable();
            h.data.extend_from_slice(&e);
        }
        Ok(h)
    }

    pub(crate) fn push_edge(&mut self, edge: &mut [u32]) {
        debug_assert_eq!(edge.len(), self.k);
        edge.sort_unstable();
        self.data.extend_from_slice(edge);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        if self.k == 0 {
            0
        } else {
            self.data.len() / self.k
        }
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks_exact(self.k)
    }

    /// Vertex degrees counting occurrence multiplicity: a vertex appearing
    /// twice in one edge gains 2.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &v in &self.data {
            deg[v as usize] += 1;
        }
        deg
    }

    /// Serialize to the shared text format: `n m k` on the first line,
    /// then one line of k space-separated vertex ids per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 + self.data.len() * 7);
        let _ = writeln!(out, "{} {} {}", self.n, self.m(), self.k);
        for e in self.edges() {
            for (i, v) in e.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    /// Parse the text format. `#` starts a comment; blank lines are
    /// skipped. Edges are kept in file order with entries as written.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut h: Option<Hypergraph> = None;
        let mut edges_read = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let parse_err = |msg: String| Error::Parse { line: lineno, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 3 {
                        return Err(parse_err(format!(
                            "expected header `n m k`, got {} fields",
                            fields.len()
                        )));
                    }
                    let n: usize = fields[0].parse().map_err(|_| parse_err("bad n".into()))?;
                    let m: usize = fields[1].parse().map_err(|_| parse_err("bad m".into()))?;
                    let k: usize = fields[2].parse().map_err(|_| parse_err("bad k".into()))?;
                    if k < 1 {
                        return Err(parse_err("k must be >= 1".into()));
                    }
                    if n > u32::MAX as usize {
                        return Err(parse_err("n exceeds u32 range".into()));
                    }
                    header = Some((n, m, k));
                    h = Some(Hypergraph::with_capacity(n, k, m));
                }
                Some((n, m, k)) => {
                    if edges_read == m {
                        return Err(parse_err(format!("more than {m} edge lines")));
                    }
                    if fields.len() != k {
                        return Err(parse_err(format!(
                            "expected {k} vertex ids, got {}",
                            fields.len()
                        )));
                    }
                    let hg = h.as_mut().unwrap();
                    for f in &fields {
                        let v: u32 = f
                            .parse()
                            .map_err(|_| parse_err(format!("bad vertex id `{f}`")))?;
                        if v as usize >= n {
                            return Err(parse_err(format!("vertex {v} outside [0, {n})")));
                        }
                        hg.data.push(v);
                    }
                    edges_read += 1;
                }
            }
        }
        match header {
            None => Err(Error::Parse {
                line: 0,
                msg: "empty input".into(),
            }),
            Some((_, m, _)) if edges_read != m => Err(Error::Parse {
                line: 0,
                msg: format!("header promised {m} edges, found {edges_read}"),
            }),
            Some(_) => Ok(h.unwrap()),
        }
    }
}

/// Exact edges-per-vertices ratio kept in integer arithmetic, so
/// comparisons against the capacity ell never hit float-equality traps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Density {
    pub edges: u64,
    pub vertices: u64,
}

impl Density {
    pub fn new(edges: u64, vertices: u64) -> Self {
        Density { edges, vertices }
    }

    /// edges/vertices > ell, exactly.
    pub fn exceeds(&self, ell: u32) -> bool {
        self.edges as u128 > ell as u128 * self.vertices as u128
    }

    /// edges/vertices >= ell, exactly.
    pub fn at_least(&self, ell: u32) -> bool {
        self.edges as u128 >= ell as u128 * self.vertices as u128
    }

    /// Float value; the empty 0/0 ratio reads as 0.
    pub fn as_f64(&self) -> f64 {
        if self.vertices == 0 {
            0.0
        } else {
            self.edges as f64 / self.vertices as f64
        }
    }
}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    /// Cross-multiplied exact comparison; only meaningful for nonempty
    /// vertex sets (0/0 compares below everything nonzero).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = self.edges as u128 * other.vertices as u128;
        let rhs = other.edges as u128 * self.vertices as u128;
        lhs.cmp(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let h = Hypergraph::from_edges(5, 3, &[vec![2, 0, 1], vec![4, 3, 2]]).unwrap();
        let text = h.to_text();
        assert_eq!(text, "5 2 3\n0 1 2\n2 3 4\n");
        let back = Hypergraph::from_text(&text).unwrap();
        assert_eq!(back.n(), 5);
        assert_eq!(back.m(), 2);
        assert_eq!(back.edge(0), &[0, 1, 2]);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let text = "# a comment\n\n4 1 3  # trailing\n0 1 3\n# done\n";
        let h = Hypergraph::from_text(text).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.m(), 1);
        assert_eq!(h.edge(0), &[0, 1, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(Hypergraph::from_text("").is_err());
        assert!(Hypergraph::from_text("3 1\n").is_err());
        assert!(Hypergraph::from_text("3 1 3\n0 1\n").is_err());
        assert!(Hypergraph::from_text("3 1 3\n0 1 5\n").is_err());
        assert!(Hypergraph::from_text("3 2 3\n0 1 2\n").is_err());
        assert!(Hypergraph::from_text("3 1 3\n0 1 2\n0 1 2\n").is_err());
        assert!(Hypergraph::from_text("3 1 3\n0 x 2\n").is_err());
    }

    #[test]
    fn degrees_count_multiplicity() {
        let mut h = Hypergraph::with_capacity(3, 3, 1);
        h.push_edge(&mut [1, 1, 2]);
        h.simple = false;
        assert_eq!(h.degrees(), vec![0, 2, 1]);
    }

    #[test]
    fn density_exact_comparisons() {
        let d = Density::new(6, 3);
        assert!(!d.exceeds(2));
        assert!(d.at_least(2));
        assert!(Density::new(7, 3).exceeds(2));
        assert!(Density::new(6, 3) > Density::new(7, 4));
        assert_eq!(Density::new(2, 4), Density::new(2, 4));
        assert_eq!(Density::new(0, 0).as_f64(), 0.0);
    }

    #[test]
    fn from_edges_validates() {
        assert!(Hypergraph::from_edges(3, 3, &[vec![0, 1]]).is_err());
        assert!(Hypergraph::from_edges(3, 3, &[vec![0, 1, 3]]).is_err());
        assert!(Hypergraph::from_edges(3, 0, &[]).is_err());
    }
}
