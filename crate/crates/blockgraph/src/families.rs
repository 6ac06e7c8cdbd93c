//! Named graph families: weighted complete blocks, the (n, m, k) family,
//! generalized stars, pendant-path skeletons, and trees of block graphs,
//! together with their closed-form singularity predicates.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::{classify, decompose, pendant_chains};
use crate::graph::{
    attach_complete_block, build, disjoint_union, pendant_path, GraphBuildSpec,
    LoopWeightedGraph, Vertex,
};
use crate::linalg::det_graph;
use crate::ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("vertex {0} has no attached blocks; the criterion does not apply")]
    EmptyAttachment(Vertex),
    #[error("the skeleton graph is not in the pendant-path class")]
    NotP1Core,
    #[error("vertex {0} does not carry an even-order pendant path")]
    NotEvenPathVertex(Vertex),
}

/// Central complete block of order `n` with `k_i` pendant complete blocks of
/// orders `attachments[i]` coalesced at vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarSpec {
    pub n: usize,
    pub attachments: Vec<Vec<usize>>,
}

/// Tree of block graphs: `parts[i]` sits at tree node `i`; for each tree edge
/// `(i, j)` one bridge edge joins `junctions` vertex of part `i` to that of
/// part `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeSpec {
    pub tree_edges: Vec<(usize, usize)>,
    pub parts: Vec<GraphBuildSpec>,
    pub junctions: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Complete graph of order `n` with loop weights on the first `r`
    /// vertices, each required to be below 1.
    KrN {
        n: usize,
        r: usize,
        #[serde(with = "crate::ratio::rat_vec")]
        weights: Vec<BigRational>,
    },
    /// `k` pendant complete blocks of order `m` at every vertex of a central
    /// complete graph of order `n`.
    Nmk { n: usize, m: usize, k: usize },
    GeneralizedStar(StarSpec),
    /// A core graph with at most one pendant path per attachment vertex;
    /// `paths` lists (attachment vertex, path order), the path order counting
    /// the attachment vertex.
    P1 { core: GraphBuildSpec, paths: Vec<(Vertex, usize)> },
    TreeOfBlocks(TreeSpec),
}

/// Builds the family member with deterministic vertex numbering: center
/// vertices first, then attachments in spec order.
pub fn generate(spec: &FamilySpec) -> Result<LoopWeightedGraph, FamilyError> {
    match spec {
        FamilySpec::KrN { n, r, weights } => {
            if *n < 2 || *r > n - 1 || weights.len() != *r {
                return Err(FamilyError::InvalidSpec(format!(
                    "KrN requires n >= 2, r <= n-1 and r weights, got n={n}, r={r}, {} weights",
                    weights.len()
                )));
            }
            let one = BigRational::one();
            if weights.iter().any(|w| *w >= one) {
                return Err(FamilyError::InvalidSpec(
                    "KrN loop weights must be below 1".into(),
                ));
            }
            let g = LoopWeightedGraph::complete(*n);
            let mut g = g;
            for (i, w) in weights.iter().enumerate() {
                g = g.with_loop(i, w.clone()).expect("i < r <= n");
            }
            Ok(g)
        }
        FamilySpec::Nmk { n, m, k } => {
            if *n < 2 || *m < 3 || *k < 1 {
                return Err(FamilyError::InvalidSpec(format!(
                    "Nmk requires n >= 2, m >= 3, k >= 1, got ({n}, {m}, {k})"
                )));
            }
            let mut g = LoopWeightedGraph::complete(*n);
            for center in 0..*n {
                for _ in 0..*k {
                    g = attach_complete_block(&g, center, *m).expect("center in range");
                }
            }
            debug_assert_eq!(g.n(), n * k * (m - 1) + n);
            Ok(g)
        }
        FamilySpec::GeneralizedStar(star) => {
            validate_star(star)?;
            let mut g = LoopWeightedGraph::complete(star.n);
            for (center, orders) in star.attachments.iter().enumerate() {
                for &m in orders {
                    g = attach_complete_block(&g, center, m).expect("center in range");
                }
            }
            Ok(g)
        }
        FamilySpec::P1 { core, paths } => {
            let mut g = build(core)
                .map_err(|e| FamilyError::InvalidSpec(format!("core: {e}")))?;
            let mut seen = std::collections::BTreeSet::new();
            for &(at, order) in paths {
                if order < 2 {
                    return Err(FamilyError::InvalidSpec(format!(
                        "pendant path order must be >= 2, got {order}"
                    )));
                }
                if !seen.insert(at) {
                    return Err(FamilyError::InvalidSpec(format!(
                        "two pendant paths at vertex {at}"
                    )));
                }
                g = pendant_path(&g, at, order - 1)
                    .map_err(|e| FamilyError::InvalidSpec(e.to_string()))?;
            }
            if !classify(&g).is_p1 {
                return Err(FamilyError::InvalidSpec(
                    "the built graph is not in the pendant-path class".into(),
                ));
            }
            Ok(g)
        }
        FamilySpec::TreeOfBlocks(tree) => build_tree_of_blocks(tree),
    }
}

fn validate_star(star: &StarSpec) -> Result<(), FamilyError> {
    if star.n < 2 {
        return Err(FamilyError::InvalidSpec(format!(
            "the central block needs order >= 2, got {}",
            star.n
        )));
    }
    if star.attachments.len() != star.n {
        return Err(FamilyError::InvalidSpec(format!(
            "expected {} attachment lists, got {}",
            star.n,
            star.attachments.len()
        )));
    }
    for orders in &star.attachments {
        if orders.iter().any(|&m| m < 3) {
            return Err(FamilyError::InvalidSpec(
                "attached block orders must all be greater than 2".into(),
            ));
        }
    }
    Ok(())
}

/// Exact singularity criterion for the (n, m, k) family:
/// singular iff k (m-1)/(m-2) = n - 1.
pub fn nmk_is_singular(n: usize, m: usize, k: usize) -> Result<bool, FamilyError> {
    if n < 2 || m < 3 || k < 1 {
        return Err(FamilyError::InvalidSpec(format!(
            "requires n >= 2, m >= 3, k >= 1, got ({n}, {m}, {k})"
        )));
    }
    let lhs = ratio::int(k as i64) * ratio::rat(m as i64 - 1, m as i64 - 2);
    Ok(lhs == ratio::int(n as i64 - 1))
}

/// Exact-sum criterion for a generalized star: nonsingular iff
/// sum_i 1 / (1 + sum_j (m_ij - 1)/(m_ij - 2)) != 1. Vertices without
/// attachments are outside the criterion's hypothesis and are rejected.
pub fn star_is_nonsingular(star: &StarSpec) -> Result<bool, FamilyError> {
    validate_star(star)?;
    if let Some(i) = star.attachments.iter().position(|orders| orders.is_empty()) {
        return Err(FamilyError::EmptyAttachment(i));
    }
    let mut total = BigRational::zero();
    let one = BigRational::one();
    for orders in &star.attachments {
        let mut d = BigRational::zero();
        for &m in orders {
            d += ratio::rat(m as i64 - 1, m as i64 - 2);
        }
        total += (&one + &d).recip();
    }
    Ok(total != one)
}

/// Sufficient diagonal-dominance condition. Applies to stars whose
/// attachments are uniform per center vertex (`k_i` blocks all of order
/// `m_i`): nonsingular whenever k_i (m_i-1)/(m_i-2) > n - 1 for every i.
pub fn star_diag_dominant_sufficient(star: &StarSpec) -> Result<bool, FamilyError> {
    validate_star(star)?;
    let mut all_dominant = true;
    for (i, orders) in star.attachments.iter().enumerate() {
        if orders.is_empty() {
            return Err(FamilyError::EmptyAttachment(i));
        }
        let m = orders[0];
        if orders.iter().any(|&o| o != m) {
            return Err(FamilyError::InvalidSpec(format!(
                "vertex {i} mixes block orders; the dominance condition needs uniform orders"
            )));
        }
        let k = orders.len() as i64;
        let lhs = ratio::int(k) * ratio::rat(m as i64 - 1, m as i64 - 2);
        if lhs <= ratio::int(star.n as i64 - 1) {
            all_dominant = false;
        }
    }
    Ok(all_dominant)
}

/// Places the parts at tree nodes and joins each tree edge's junction
/// vertices by a bridge edge. Part `i`'s vertices are shifted by the total
/// order of parts 0..i.
pub fn build_tree_of_blocks(tree: &TreeSpec) -> Result<LoopWeightedGraph, FamilyError> {
    let p = tree.parts.len();
    if p == 0 {
        return Err(FamilyError::InvalidSpec("a tree needs at least one part".into()));
    }
    if tree.tree_edges.len() != p - 1 {
        return Err(FamilyError::InvalidSpec(format!(
            "a tree on {p} parts has {} edges, got {}",
            p - 1,
            tree.tree_edges.len()
        )));
    }
    if tree.junctions.len() != tree.tree_edges.len() {
        return Err(FamilyError::InvalidSpec(
            "one junction pair is needed per tree edge".into(),
        ));
    }
    // Acyclic + connected via union-find.
    let mut parent: Vec<usize> = (0..p).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(i, j) in &tree.tree_edges {
        if i >= p || j >= p {
            return Err(FamilyError::InvalidSpec(format!(
                "tree edge ({i}, {j}) references a missing part"
            )));
        }
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri == rj {
            return Err(FamilyError::InvalidSpec("tree edges contain a cycle".into()));
        }
        parent[ri] = rj;
    }

    let parts: Vec<LoopWeightedGraph> = tree
        .parts
        .iter()
        .map(|spec| build(spec).map_err(|e| FamilyError::InvalidSpec(e.to_string())))
        .collect::<Result<_, _>>()?;
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, g| {
            let here = *acc;
            *acc += g.n();
            Some(here)
        })
        .collect();
    let union = disjoint_union(&parts.iter().collect::<Vec<_>>());
    let mut edges: Vec<(Vertex, Vertex)> = union.edges().collect();
    for (&(i, j), &(u, v)) in tree.tree_edges.iter().zip(&tree.junctions) {
        if u >= parts[i].n() || v >= parts[j].n() {
            return Err(FamilyError::InvalidSpec(format!(
                "junction ({u}, {v}) out of range for parts ({i}, {j})"
            )));
        }
        edges.push((offsets[i] + u, offsets[j] + v));
    }
    LoopWeightedGraph::from_parts(
        union.n(),
        edges,
        union.loops().iter().map(|(v, w)| (*v, w.clone())),
    )
    .map_err(|e| FamilyError::InvalidSpec(e.to_string()))
}

/// A skeleton attachment: the built graph together with the closed-form
/// verdict (nonsingular iff every attached part is).
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonAttachResult {
    pub graph: LoopWeightedGraph,
    pub nonsingular: bool,
}

/// Attaches block graphs by bridge edges at skeleton vertices that carry
/// even-order pendant paths. Each attachment is (part, vertex of the part,
/// skeleton attachment vertex); the skeleton must classify into the
/// pendant-path class and every named attachment vertex must anchor an
/// even-order pendant path.
pub fn p1_skeleton_attach(
    core: &LoopWeightedGraph,
    attachments: &[(LoopWeightedGraph, Vertex, Vertex)],
) -> Result<SkeletonAttachResult, FamilyError> {
    if !classify(core).is_p1 {
        return Err(FamilyError::NotP1Core);
    }
    let chains = pendant_chains(core);
    for &(_, _, at) in attachments {
        // The pendant path at the anchor has order chain length + 1.
        let even = chains
            .iter()
            .any(|c| c.anchor == Some(at) && (c.vertices.len() + 1) % 2 == 0);
        if !even {
            return Err(FamilyError::NotEvenPathVertex(at));
        }
    }
    let mut all_parts: Vec<&LoopWeightedGraph> = vec![core];
    for (w, _, _) in attachments {
        all_parts.push(w);
    }
    let union = disjoint_union(&all_parts);
    let mut offset = core.n();
    let mut edges: Vec<(Vertex, Vertex)> = union.edges().collect();
    let mut nonsingular = true;
    for (w, w_vertex, at) in attachments {
        if *w_vertex >= w.n() {
            return Err(FamilyError::InvalidSpec(format!(
                "attachment vertex {w_vertex} out of range"
            )));
        }
        edges.push((*at, offset + w_vertex));
        offset += w.n();
        nonsingular &= !det_graph(w).is_zero();
    }
    let graph = LoopWeightedGraph::from_parts(
        union.n(),
        edges,
        union.loops().iter().map(|(v, w)| (*v, w.clone())),
    )
    .map_err(|e| FamilyError::InvalidSpec(e.to_string()))?;
    Ok(SkeletonAttachResult { graph, nonsingular })
}

/// Recognizes the (n, m, k) structure of a loopless graph: a central
/// complete block such that every other block is pendant, attached at a
/// central vertex, all of one order m >= 3, with the same count k >= 1 at
/// every central vertex.
pub fn detect_nmk(g: &LoopWeightedGraph) -> Option<(usize, usize, usize)> {
    if !g.is_loopless() || !g.is_connected() || g.n() == 0 {
        return None;
    }
    let decomp = decompose(g);
    if !decomp
        .blocks
        .iter()
        .all(|b| crate::blocks::block_is_complete(g, b))
    {
        return None;
    }
    if decomp.blocks.len() < 2 {
        return None;
    }
    'candidate: for center in 0..decomp.blocks.len() {
        let n = decomp.block_order(center);
        if n < 2 {
            continue;
        }
        let mut m = None;
        let mut counts = vec![0usize; g.n()];
        for b in 0..decomp.blocks.len() {
            if b == center {
                continue;
            }
            if !decomp.is_pendant_block(b) {
                continue 'candidate;
            }
            let cut = decomp.block_cuts[b][0];
            if !decomp.blocks[center].contains(cut) {
                continue 'candidate;
            }
            let order = decomp.block_order(b);
            if order < 3 || *m.get_or_insert(order) != order {
                continue 'candidate;
            }
            counts[cut] += 1;
        }
        let m = m?;
        let center_counts: Vec<usize> =
            decomp.blocks[center].iter().map(|v| counts[v]).collect();
        let k = center_counts[0];
        if k >= 1 && center_counts.iter().all(|&c| c == k) {
            return Some((n, m, k));
        }
    }
    None
}
