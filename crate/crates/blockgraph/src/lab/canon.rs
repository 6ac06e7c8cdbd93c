//! Canonical labeling by individualization and refinement.
//!
//! The canonical form of a loopless graph is the lexicographically least
//! adjacency bitstring over all vertex orderings compatible with iterated
//! equitable degree refinement. The search backtracks over every choice in
//! each non-singleton cell, so it is exhaustive and exact; automorphisms
//! discovered at equal leaves prune symmetric branches, which keeps complete
//! graphs and other highly symmetric inputs cheap.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{LoopWeightedGraph, Vertex};
use crate::io::write_graph6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabError {
    #[error("canonical forms are defined for loopless graphs only")]
    HasLoops,
}

/// Isomorphism-invariant key: vertex count plus the canonical adjacency
/// bitstring (upper triangle in column order, packed high bit first, so the
/// derived ordering is the lexicographic bitstring order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    fn bit(&self, t: usize) -> bool {
        self.bits[t / 64] & (1 << (63 - (t % 64))) != 0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> LoopWeightedGraph {
        let mut edges = Vec::new();
        let mut t = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bit(t) {
                    edges.push((i, j));
                }
                t += 1;
            }
        }
        LoopWeightedGraph::from_parts(self.n, edges, []).expect("bits index valid pairs")
    }

    pub fn to_graph6(&self) -> String {
        write_graph6(&self.to_graph()).expect("canonical graphs carry no loops")
    }
}

struct Searcher {
    n: usize,
    adj: Vec<u64>,
    best: Option<(Vec<u64>, Vec<Vertex>)>,
    generators: Vec<Vec<Vertex>>,
}

type Cells = Vec<Vec<Vertex>>;

impl Searcher {
    fn leaf_bits(&self, labeling: &[Vertex]) -> Vec<u64> {
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; nbits.div_ceil(64)];
        let mut t = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.adj[labeling[i]] >> labeling[j] & 1 == 1 {
                    bits[t / 64] |= 1 << (63 - (t % 64));
                }
                t += 1;
            }
        }
        bits
    }

    // Equitable refinement: split cells by neighbor counts against every cell
    // until stable. Sub-cells are ordered by ascending count signature, which
    // is isomorphism-invariant.
    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let mut split_at = None;
            'scan: for ci in 0..cells.len() {
                if cells[ci].len() <= 1 {
                    continue;
                }
                let mut groups: BTreeMap<Vec<usize>, Vec<Vertex>> = BTreeMap::new();
                for &v in &cells[ci] {
                    let sig: Vec<usize> = cells
                        .iter()
                        .map(|cell| {
                            cell.iter().filter(|&&u| self.adj[v] >> u & 1 == 1).count()
                        })
                        .collect();
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() > 1 {
                    split_at = Some((ci, groups.into_values().collect::<Vec<_>>()));
                    break 'scan;
                }
            }
            match split_at {
                Some((ci, replacement)) => {
                    cells.splice(ci..=ci, replacement);
                }
                None => return cells,
            }
        }
    }

    fn is_automorphism(&self, gamma: &[Vertex]) -> bool {
        (0..self.n).all(|u| {
            (0..u).all(|v| {
                (self.adj[u] >> v & 1) == (self.adj[gamma[u]] >> gamma[v] & 1)
            })
        })
    }

    // Is v in the orbit of an already-tried candidate, under the subgroup
    // generated by the automorphisms that fix the individualized prefix
    // pointwise? If so, its branch is a mirror image of a explored one.
    fn in_tried_orbit(&self, v: Vertex, tried: &[Vertex], prefix: &[Vertex]) -> bool {
        if tried.is_empty() || self.generators.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.generators {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &gx) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, gx));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn search(&mut self, cells: Cells, prefix: &mut Vec<Vertex>) {
        let target = cells.iter().position(|c| c.len() > 1);
        match target {
            None => {
                let labeling: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
                let bits = self.leaf_bits(&labeling);
                match &self.best {
                    None => self.best = Some((bits, labeling)),
                    Some((best_bits, best_labeling)) => {
                        if bits < *best_bits {
                            self.best = Some((bits, labeling));
                        } else if bits == *best_bits {
                            let mut gamma = vec![0; self.n];
                            for p in 0..self.n {
                                gamma[best_labeling[p]] = labeling[p];
                            }
                            if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                                debug_assert!(self.is_automorphism(&gamma));
                                self.generators.push(gamma);
                            }
                        }
                    }
                }
            }
            Some(ci) => {
                let cell = cells[ci].clone();
                let mut tried: Vec<Vertex> = Vec::new();
                for &v in &cell {
                    if self.in_tried_orbit(v, &tried, prefix) {
                        continue;
                    }
                    tried.push(v);
                    let rest: Vec<Vertex> =
                        cell.iter().copied().filter(|&u| u != v).collect();
                    let mut next = cells.clone();
                    next.splice(ci..=ci, [vec![v], rest]);
                    let refined = self.refine(next);
                    prefix.push(v);
                    self.search(refined, prefix);
                    prefix.pop();
                }
            }
        }
    }
}

/// Canonical form of a loopless graph on at most 64 vertices.
pub fn canonical_form(g: &LoopWeightedGraph) -> Result<CanonicalForm, LabError> {
    if !g.is_loopless() {
        return Err(LabError::HasLoops);
    }
    let n = g.n();
    assert!(n <= 64, "canonical forms support up to 64 vertices");
    if n == 0 {
        return Ok(CanonicalForm { n, bits: Vec::new() });
    }
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut searcher = Searcher { n, adj, best: None, generators: Vec::new() };
    let initial = searcher.refine(vec![(0..n).collect()]);
    let mut prefix = Vec::new();
    searcher.search(initial, &mut prefix);
    let (bits, _) = searcher.best.expect("at least one leaf labeling exists");
    Ok(CanonicalForm { n, bits })
}

/// Reference isomorphism test by exhaustive backtracking over vertex
/// assignments; independent of the canonical-form search and only meant for
/// cross-checks on small graphs.
pub fn are_isomorphic_by_permutation(a: &LoopWeightedGraph, b: &LoopWeightedGraph) -> bool {
    assert!(a.n() <= 16, "exhaustive check is for small graphs");
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let masks = |g: &LoopWeightedGraph| {
        let mut adj = vec![0u16; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    };
    let (adj_a, adj_b) = (masks(a), masks(b));
    let mut deg_a: Vec<u32> = adj_a.iter().map(|m| m.count_ones()).collect();
    let mut deg_b: Vec<u32> = adj_b.iter().map(|m| m.count_ones()).collect();
    let degrees_a = deg_a.clone();
    let degrees_b = deg_b.clone();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }

    fn extend(
        k: usize,
        perm: &mut Vec<Vertex>,
        used: u16,
        adj_a: &[u16],
        adj_b: &[u16],
        deg_a: &[u32],
        deg_b: &[u32],
    ) -> bool {
        let n = adj_a.len();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used & (1 << cand) != 0 || deg_a[k] != deg_b[cand] {
                continue;
            }
            let consistent = (0..k)
                .all(|i| (adj_a[k] >> i & 1) == (adj_b[cand] >> perm[i] & 1));
            if consistent {
                perm.push(cand);
                if extend(k + 1, perm, used | (1 << cand), adj_a, adj_b, deg_a, deg_b) {
                    return true;
                }
                perm.pop();
            }
        }
        false
    }
    extend(0, &mut Vec::new(), 0, &adj_a, &adj_b, &degrees_a, &degrees_b)
}
