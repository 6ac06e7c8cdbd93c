//! Graph values and the compositional constructors: coalescence, disjoint
//! union, pendant paths, and bridge edges.
//!
//! Graphs are immutable after construction; every operation returns a new
//! value, so graphs are freely shareable across threads.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {{{0}, {0}}} would be a self-loop")]
    SelfEdge(Vertex),
    #[error("conflicting loop weights {left} and {right} at the coalesced vertex")]
    ConflictingLoopWeights { left: String, right: String },
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("loop weights are not representable in graph6")]
    LoopsNotRepresentable,
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Undirected simple graph with an optional exact rational loop weight per
/// vertex. A vertex absent from the loop map has weight exactly zero; zero
/// weights are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopWeightedGraph {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
    loops: BTreeMap<Vertex, BigRational>,
}

impl LoopWeightedGraph {
    pub fn empty(n: usize) -> Self {
        LoopWeightedGraph { n, edges: BTreeSet::new(), loops: BTreeMap::new() }
    }

    pub fn from_parts(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        loops: impl IntoIterator<Item = (Vertex, BigRational)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        for (v, w) in loops {
            g.check_vertex(v)?;
            g.set_loop_in_place(v, w);
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// Path on `n` vertices, edges `i`–`i+1`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.edges.insert((i - 1, i));
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Self::path(n);
        g.edges.insert((0, n - 1));
        g
    }

    /// Star with one center (vertex 0) and `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.edges.insert((0, v));
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.contains(&key)
    }

    pub fn loop_weight(&self, v: Vertex) -> BigRational {
        self.loops.get(&v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn loops(&self) -> &BTreeMap<Vertex, BigRational> {
        &self.loops
    }

    pub fn is_loopless(&self) -> bool {
        self.loops.is_empty()
    }

    /// Copy with the loop weight at `v` replaced (zero weight clears it).
    pub fn with_loop(&self, v: Vertex, w: BigRational) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.set_loop_in_place(v, w);
        Ok(g)
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency lists for all vertices at once.
    pub fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfEdge(u));
        }
        self.edges.insert(if u < v { (u, v) } else { (v, u) });
        Ok(())
    }

    fn set_loop_in_place(&mut self, v: Vertex, w: BigRational) {
        if w.is_zero() {
            self.loops.remove(&v);
        } else {
            self.loops.insert(v, w);
        }
    }
}

/// Sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Recipe for a graph built from the compositional vocabulary. `length` in
/// `PendantPath` counts the newly added vertices, so the attached path has
/// order `length + 1` including the attachment vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphBuildSpec {
    Explicit {
        n: usize,
        #[serde(default)]
        edges: Vec<(Vertex, Vertex)>,
        #[serde(default, with = "crate::ratio::rat_map")]
        loops: BTreeMap<Vertex, BigRational>,
    },
    Coalescence {
        left: Box<GraphBuildSpec>,
        right: Box<GraphBuildSpec>,
        v_left: Vertex,
        v_right: Vertex,
    },
    DisjointUnion {
        parts: Vec<GraphBuildSpec>,
    },
    PendantPath {
        base: Box<GraphBuildSpec>,
        at: Vertex,
        length: usize,
    },
    Bridge {
        left: Box<GraphBuildSpec>,
        v_left: Vertex,
        right: Box<GraphBuildSpec>,
        v_right: Vertex,
    },
}

pub fn build(spec: &GraphBuildSpec) -> Result<LoopWeightedGraph, GraphError> {
    match spec {
        GraphBuildSpec::Explicit { n, edges, loops } => LoopWeightedGraph::from_parts(
            *n,
            edges.iter().copied(),
            loops.iter().map(|(v, w)| (*v, w.clone())),
        ),
        GraphBuildSpec::Coalescence { left, right, v_left, v_right } => {
            coalesce(&build(left)?, *v_left, &build(right)?, *v_right)
        }
        GraphBuildSpec::DisjointUnion { parts } => {
            let built: Vec<LoopWeightedGraph> =
                parts.iter().map(build).collect::<Result<_, _>>()?;
            Ok(disjoint_union(&built.iter().collect::<Vec<_>>()))
        }
        GraphBuildSpec::PendantPath { base, at, length } => {
            pendant_path(&build(base)?, *at, *length)
        }
        GraphBuildSpec::Bridge { left, v_left, right, v_right } => {
            bridge(&build(left)?, *v_left, &build(right)?, *v_right)
        }
    }
}

/// Identifies `v1` of `g1` with `v2` of `g2`. The merged vertex keeps id `v1`;
/// vertices of `g2` other than `v2` follow after `g1` in their original order.
/// Loop weights at the merged vertex must agree or one side must be zero.
pub fn coalesce(
    g1: &LoopWeightedGraph,
    v1: Vertex,
    g2: &LoopWeightedGraph,
    v2: Vertex,
) -> Result<LoopWeightedGraph, GraphError> {
    if v1 >= g1.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v1, n: g1.n() });
    }
    if v2 >= g2.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v2, n: g2.n() });
    }
    let w1 = g1.loop_weight(v1);
    let w2 = g2.loop_weight(v2);
    let merged_weight = if w1.is_zero() {
        w2
    } else if w2.is_zero() || w1 == w2 {
        w1
    } else {
        return Err(GraphError::ConflictingLoopWeights {
            left: crate::ratio::format_pq(&w1),
            right: crate::ratio::format_pq(&w2),
        });
    };

    let n1 = g1.n();
    // g2 vertex ids: v2 maps to v1, the rest to n1, n1+1, ... in order.
    let map2 = |v: Vertex| -> Vertex {
        use std::cmp::Ordering::*;
        match v.cmp(&v2) {
            Equal => v1,
            Less => n1 + v,
            Greater => n1 + v - 1,
        }
    };
    let mut g = LoopWeightedGraph::empty(n1 + g2.n() - 1);
    for (u, v) in g1.edges() {
        g.insert_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        g.insert_edge(map2(u), map2(v))?;
    }
    for (&v, w) in g1.loops() {
        if v != v1 {
            g.set_loop_in_place(v, w.clone());
        }
    }
    for (&v, w) in g2.loops() {
        if v != v2 {
            g.set_loop_in_place(map2(v), w.clone());
        }
    }
    g.set_loop_in_place(v1, merged_weight);
    Ok(g)
}

/// Disjoint union; part `i`'s vertices are shifted by the total order of the
/// preceding parts.
pub fn disjoint_union(parts: &[&LoopWeightedGraph]) -> LoopWeightedGraph {
    let n = parts.iter().map(|g| g.n()).sum();
    let mut g = LoopWeightedGraph::empty(n);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            g.edges.insert((offset + u, offset + v));
        }
        for (&v, w) in part.loops() {
            g.set_loop_in_place(offset + v, w.clone());
        }
        offset += part.n();
    }
    g
}

/// Attaches a dangling chain of `length` new vertices at `at`; the resulting
/// pendant path has order `length + 1` counting the attachment vertex.
pub fn pendant_path(
    base: &LoopWeightedGraph,
    at: Vertex,
    length: usize,
) -> Result<LoopWeightedGraph, GraphError> {
    if at >= base.n() {
        return Err(GraphError::VertexOutOfRange { vertex: at, n: base.n() });
    }
    let mut g = base.clone();
    g.n += length;
    let mut prev = at;
    for i in 0..length {
        let next = base.n() + i;
        g.edges.insert(if prev < next { (prev, next) } else { (next, prev) });
        prev = next;
    }
    Ok(g)
}

/// Coalesces a new complete block of the given order at `at`: the block
/// consists of `at` plus `order - 1` fresh vertices, all mutually adjacent.
pub fn attach_complete_block(
    base: &LoopWeightedGraph,
    at: Vertex,
    order: usize,
) -> Result<LoopWeightedGraph, GraphError> {
    if at >= base.n() {
        return Err(GraphError::VertexOutOfRange { vertex: at, n: base.n() });
    }
    assert!(order >= 2, "a block has at least two vertices");
    let mut g = base.clone();
    g.n += order - 1;
    let fresh: Vec<Vertex> = (base.n()..base.n() + order - 1).collect();
    for (i, &u) in fresh.iter().enumerate() {
        g.edges.insert((at, u));
        for &v in &fresh[i + 1..] {
            g.edges.insert((u, v));
        }
    }
    Ok(g)
}

/// Disjoint union of `g1` and `g2` plus the single edge `v1`–`v2`.
pub fn bridge(
    g1: &LoopWeightedGraph,
    v1: Vertex,
    g2: &LoopWeightedGraph,
    v2: Vertex,
) -> Result<LoopWeightedGraph, GraphError> {
    if v1 >= g1.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v1, n: g1.n() });
    }
    if v2 >= g2.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v2, n: g2.n() });
    }
    let mut g = disjoint_union(&[g1, g2]);
    g.insert_edge(v1, g1.n() + v2)?;
    Ok(g)
}

/// Deletes the vertices in `drop` and relabels the survivors densely,
/// preserving relative order. Returns the old-to-new vertex map alongside.
pub fn induced_delete(
    g: &LoopWeightedGraph,
    drop: &VertexSet,
) -> Result<(LoopWeightedGraph, BTreeMap<Vertex, Vertex>), GraphError> {
    for v in drop.iter() {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut map = BTreeMap::new();
    let mut next = 0;
    for v in 0..g.n() {
        if !drop.contains(v) {
            map.insert(v, next);
            next += 1;
        }
    }
    let mut out = LoopWeightedGraph::empty(next);
    for (u, v) in g.edges() {
        if let (Some(&nu), Some(&nv)) = (map.get(&u), map.get(&v)) {
            out.edges.insert(if nu < nv { (nu, nv) } else { (nv, nu) });
        }
    }
    for (&v, w) in g.loops() {
        if let Some(&nv) = map.get(&v) {
            out.set_loop_in_place(nv, w.clone());
        }
    }
    Ok((out, map))
}

/// Deletes a single vertex.
pub fn delete_vertex(
    g: &LoopWeightedGraph,
    v: Vertex,
) -> Result<LoopWeightedGraph, GraphError> {
    induced_delete(g, &VertexSet::new(vec![v])).map(|(g, _)| g)
}
