//! Determinant and rank engines beyond dense elimination: coalescence and
//! bridge determinant identities, even-pendant-path and pendant-block rank
//! reductions with audit certificates, and the combinatorial block
//! determinant formula.
//!
//! Except for the reduction pipeline, which owns all loop-weight bookkeeping,
//! every engine here rejects graphs with preexisting loops.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::blocks::{self, decompose, pendant_chains, BlockDecomposition};
use crate::graph::{
    bridge, coalesce, delete_vertex, disjoint_union, induced_delete, LoopWeightedGraph, Vertex,
    VertexSet,
};
use crate::linalg::{adjacency_matrix, det_graph};
use crate::ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge ({0}, {1}) is not a pendant edge")]
    NotPendantEdge(Vertex, Vertex),
    #[error("a loop weight equals 1; the weighted-block criteria do not apply")]
    WeightEqualsOne,
    #[error("the weighted complete block is singular and cannot be eliminated")]
    SingularBlock,
    #[error("not a pendant complete block with the given cut vertex")]
    NotPendantBlock,
    #[error("requires a connected loopless block graph")]
    NotBlockGraph,
    #[error("this engine does not accept graphs with loops")]
    HasLoops,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

fn check_vertex(g: &LoopWeightedGraph, v: Vertex) -> Result<(), EngineError> {
    if v < g.n() {
        Ok(())
    } else {
        Err(EngineError::VertexOutOfRange { vertex: v, n: g.n() })
    }
}

fn check_loopless(g: &LoopWeightedGraph) -> Result<(), EngineError> {
    if g.is_loopless() {
        Ok(())
    } else {
        Err(EngineError::HasLoops)
    }
}

/// det of the coalescence of `g1` at `v1` with `g2` at `v2`, computed from
/// the parts: det(g1) det(g2 \ v2) + det(g1 \ v1) det(g2).
pub fn det_coalescence(
    g1: &LoopWeightedGraph,
    v1: Vertex,
    g2: &LoopWeightedGraph,
    v2: Vertex,
) -> Result<BigRational, EngineError> {
    check_loopless(g1)?;
    check_loopless(g2)?;
    check_vertex(g1, v1)?;
    check_vertex(g2, v2)?;
    let g1_minus = delete_vertex(g1, v1).expect("vertex checked");
    let g2_minus = delete_vertex(g2, v2).expect("vertex checked");
    Ok(det_graph(g1) * det_graph(&g2_minus) + det_graph(&g1_minus) * det_graph(g2))
}

/// det of the graph obtained by adding the single edge `v1`–`v2` between the
/// parts: det(g1) det(g2) - det(g1 \ v1) det(g2 \ v2). The determinant of the
/// null graph is 1 by convention, which the 0x0 case realizes.
pub fn det_bridge(
    g1: &LoopWeightedGraph,
    v1: Vertex,
    g2: &LoopWeightedGraph,
    v2: Vertex,
) -> Result<BigRational, EngineError> {
    check_loopless(g1)?;
    check_loopless(g2)?;
    check_vertex(g1, v1)?;
    check_vertex(g2, v2)?;
    let g1_minus = delete_vertex(g1, v1).expect("vertex checked");
    let g2_minus = delete_vertex(g2, v2).expect("vertex checked");
    Ok(det_graph(g1) * det_graph(g2) - det_graph(&g1_minus) * det_graph(&g2_minus))
}

/// det of a graph with a pendant edge `e = (u, v)`: equal to -det of the
/// graph with both endpoints removed.
pub fn det_pendant_edge(
    g: &LoopWeightedGraph,
    e: (Vertex, Vertex),
) -> Result<BigRational, EngineError> {
    check_loopless(g)?;
    let (u, v) = e;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) || (g.degree(u) != 1 && g.degree(v) != 1) {
        return Err(EngineError::NotPendantEdge(u, v));
    }
    let (rest, _) = induced_delete(g, &VertexSet::new(vec![u, v])).expect("vertices checked");
    Ok(-det_graph(&rest))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    EvenPath,
    PendantBlock,
    PathParity,
}

/// One rewrite of the reduction pipeline. `removed` always refers to vertex
/// ids of the graph the whole certificate started from.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub removed: VertexSet,
    pub rank_offset: usize,
    pub gamma: Option<BigRational>,
    pub norm_y_sq: Option<BigRational>,
}

/// Audit trail of a structural reduction. The defining invariant is
/// `sum of rank offsets + rank(residual) = rank(original)`.
#[derive(Debug, Clone)]
pub struct ReductionCertificate {
    pub steps: Vec<ReductionStep>,
    pub residual: LoopWeightedGraph,
    /// Original id of each residual vertex, in residual order.
    pub residual_original_ids: Vec<Vertex>,
}

impl ReductionCertificate {
    pub fn rank_offset_sum(&self) -> usize {
        self.steps.iter().map(|s| s.rank_offset).sum()
    }

    /// Offsets plus the exact rank of the residual.
    pub fn total_rank(&self) -> usize {
        self.rank_offset_sum() + adjacency_matrix(&self.residual).rank_exact()
    }
}

struct ReductionState {
    g: LoopWeightedGraph,
    orig: Vec<Vertex>,
}

impl ReductionState {
    fn new(g: &LoopWeightedGraph) -> Self {
        ReductionState { g: g.clone(), orig: (0..g.n()).collect() }
    }

    /// Removes the given current-id vertices; returns their original ids.
    fn remove(&mut self, current_ids: &[Vertex]) -> VertexSet {
        let drop = VertexSet::new(current_ids.to_vec());
        let removed: VertexSet = drop.iter().map(|v| self.orig[v]).collect();
        let (next, map) = induced_delete(&self.g, &drop).expect("ids tracked internally");
        let mut orig = vec![0; next.n()];
        for (old, new) in map {
            orig[new] = self.orig[old];
        }
        self.g = next;
        self.orig = orig;
        removed
    }
}

// One even-path strip, if any chain admits one. A dangling chain of k
// loopless vertices at an anchor strips k vertices when k is even and k+1
// (chain plus anchor) when k is odd; a bare path component strips its largest
// even prefix. Either way the stripped subgraph is a pendant path of even
// order whose rank contribution equals its order.
fn strip_one_even_path(state: &mut ReductionState) -> Option<ReductionStep> {
    let chains = pendant_chains(&state.g);
    for chain in chains {
        let chain_loopless =
            chain.vertices.iter().all(|&v| state.g.loop_weight(v).is_zero());
        if !chain_loopless {
            continue;
        }
        let strip: Vec<Vertex> = match chain.anchor {
            None => {
                let q = chain.vertices.len();
                let s = if q % 2 == 0 { q } else { q - 1 };
                if s == 0 {
                    continue;
                }
                chain.vertices[..s].to_vec()
            }
            Some(anchor) => {
                let k = chain.vertices.len();
                if k % 2 == 0 {
                    chain.vertices.clone()
                } else {
                    let mut v = chain.vertices.clone();
                    v.push(anchor);
                    v
                }
            }
        };
        let rank_offset = strip.len();
        let removed = state.remove(&strip);
        return Some(ReductionStep {
            kind: StepKind::EvenPath,
            removed,
            rank_offset,
            gamma: None,
            norm_y_sq: None,
        });
    }
    None
}

/// Greedily strips maximal even-order pendant paths; each step removes a
/// pendant path of even order n and records a rank offset of n.
pub fn reduce_even_pendant_paths(g: &LoopWeightedGraph) -> ReductionCertificate {
    let mut state = ReductionState::new(g);
    let mut steps = Vec::new();
    while let Some(step) = strip_one_even_path(&mut state) {
        steps.push(step);
    }
    ReductionCertificate { steps, residual: state.g, residual_original_ids: state.orig }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchurGamma {
    pub gamma: BigRational,
    pub norm_y_sq: BigRational,
}

/// Nonsingularity test for the complete graph with loop weights `x_i` on all
/// of its vertices: nonsingular iff sum 1/(1 - x_i) != 1.
pub fn weighted_complete_nonsingular(weights: &[BigRational]) -> Result<bool, EngineError> {
    Ok(norm_y_sq(weights)? != BigRational::one())
}

fn norm_y_sq(weights: &[BigRational]) -> Result<BigRational, EngineError> {
    let one = BigRational::one();
    let mut sum = BigRational::zero();
    for x in weights {
        if *x == one {
            return Err(EngineError::WeightEqualsOne);
        }
        sum += (&one - x).recip();
    }
    Ok(sum)
}

/// Schur-complement correction produced by eliminating a nonsingular weighted
/// complete block: `norm_y_sq = sum 1/(1 - x_i)` over the eliminated
/// vertices, `gamma = -norm_y_sq / (norm_y_sq - 1)`. With every weight below
/// 1 and at least one weight zero, `norm_y_sq > 1` and so `gamma < -1`; the
/// unweighted block on n vertices gives `gamma = -n/(n-1)`.
pub fn schur_gamma(weights: &[BigRational]) -> Result<SchurGamma, EngineError> {
    let s = norm_y_sq(weights)?;
    let one = BigRational::one();
    if s == one {
        return Err(EngineError::SingularBlock);
    }
    let gamma = -(&s / (&s - &one));
    debug_assert!(
        !(weights.iter().all(|x| *x < one)
            && weights.iter().any(|x| x.is_zero())
            && weights.len() >= 2)
            || gamma < -one,
        "gamma < -1 must hold when all weights are < 1 and one is zero"
    );
    Ok(SchurGamma { gamma, norm_y_sq: s })
}

/// Result of eliminating one pendant complete block.
#[derive(Debug, Clone, PartialEq)]
pub struct PendantBlockReduction {
    pub step: ReductionStep,
    pub residual: LoopWeightedGraph,
    pub old_to_new: BTreeMap<Vertex, Vertex>,
}

/// Eliminates a pendant complete block: removes the block minus its cut
/// vertex (a rank offset of block order - 1) and adds the Schur correction
/// gamma to the cut vertex's loop weight. Requires every eliminated weight
/// below 1, and for blocks of order >= 3 at least one loopless eliminated
/// vertex; an order-2 block is accepted when its eliminated vertex carries a
/// nonzero weight.
pub fn reduce_pendant_block(
    g: &LoopWeightedGraph,
    block: &VertexSet,
    cut_v: Vertex,
) -> Result<PendantBlockReduction, EngineError> {
    check_vertex(g, cut_v)?;
    for v in block.iter() {
        check_vertex(g, v)?;
    }
    if !block.contains(cut_v) {
        return Err(EngineError::NotPendantBlock);
    }
    let decomp = decompose(g);
    let matches = decomp
        .blocks
        .iter()
        .zip(&decomp.block_cuts)
        .any(|(b, cuts)| b == block && cuts.as_slice() == [cut_v]);
    if !matches || !blocks::block_is_complete(g, block) {
        return Err(EngineError::NotPendantBlock);
    }

    let eliminated: Vec<Vertex> = block.iter().filter(|&v| v != cut_v).collect();
    let weights: Vec<BigRational> =
        eliminated.iter().map(|&v| g.loop_weight(v)).collect();
    let one = BigRational::one();
    if weights.iter().any(|w| *w >= one) {
        return Err(EngineError::PreconditionViolated(
            "eliminated loop weights must all be below 1".into(),
        ));
    }
    if eliminated.len() >= 2 && !weights.iter().any(|w| w.is_zero()) {
        return Err(EngineError::PreconditionViolated(
            "a block of order >= 3 needs a loopless noncut vertex".into(),
        ));
    }
    let SchurGamma { gamma, norm_y_sq } = schur_gamma(&weights)?;

    let new_cut_weight = g.loop_weight(cut_v) + &gamma;
    let (mut residual, old_to_new) =
        induced_delete(g, &VertexSet::new(eliminated.clone())).expect("vertices checked");
    residual = residual
        .with_loop(old_to_new[&cut_v], new_cut_weight)
        .expect("cut vertex survives");
    let step = ReductionStep {
        kind: StepKind::PendantBlock,
        removed: VertexSet::new(eliminated),
        rank_offset: block.len() - 1,
        gamma: Some(gamma),
        norm_y_sq: Some(norm_y_sq),
    };
    Ok(PendantBlockReduction { step, residual, old_to_new })
}

/// Full reduction pipeline: strips even pendant paths, then eliminates
/// pendant complete blocks of order >= 3 whose eliminated vertices all weigh
/// below 1 and include a loopless one, repeating to a fixpoint. Every
/// pendant-block step it emits has gamma < -1.
pub fn reduce_to_fixpoint(g: &LoopWeightedGraph) -> ReductionCertificate {
    let mut state = ReductionState::new(g);
    let mut steps = Vec::new();
    loop {
        while let Some(step) = strip_one_even_path(&mut state) {
            steps.push(step);
        }
        let decomp = decompose(&state.g);
        let one = BigRational::one();
        let candidate = decomp.pendant_blocks().into_iter().find(|&b| {
            let block = &decomp.blocks[b];
            if block.len() < 3 || !blocks::block_is_complete(&state.g, block) {
                return false;
            }
            let cut = decomp.block_cuts[b][0];
            let mut has_loopless = false;
            for v in block.iter().filter(|&v| v != cut) {
                let w = state.g.loop_weight(v);
                if w >= one {
                    return false;
                }
                has_loopless |= w.is_zero();
            }
            has_loopless
        });
        let Some(b) = candidate else { break };
        let block = decomp.blocks[b].clone();
        let cut = decomp.block_cuts[b][0];
        let reduction =
            reduce_pendant_block(&state.g, &block, cut).expect("candidate pre-validated");
        let eliminated: Vec<Vertex> = block.iter().filter(|&v| v != cut).collect();
        let removed = state.remove(&eliminated);
        // `remove` relabels exactly like `reduce_pendant_block` did.
        debug_assert_eq!(state.g.edges().count(), reduction.residual.edges().count());
        state.g = reduction.residual;
        steps.push(ReductionStep { removed, ..reduction.step });
    }
    ReductionCertificate { steps, residual: state.g, residual_original_ids: state.orig }
}

/// Builds the graph obtained by joining `v1` in `g1` to `v2` in `g2` with a
/// path of the given order: order 1 identifies the vertices, order 2 adds a
/// single edge, larger orders insert order - 2 fresh chain vertices.
pub fn join_by_path(
    g1: &LoopWeightedGraph,
    v1: Vertex,
    g2: &LoopWeightedGraph,
    v2: Vertex,
    order: usize,
) -> Result<LoopWeightedGraph, EngineError> {
    check_vertex(g1, v1)?;
    check_vertex(g2, v2)?;
    if order == 0 {
        return Err(EngineError::PreconditionViolated("path order must be >= 1".into()));
    }
    let joined = match order {
        1 => coalesce(g1, v1, g2, v2),
        2 => bridge(g1, v1, g2, v2),
        _ => {
            let mut g = disjoint_union(&[g1, g2]);
            let base = g.n();
            let mut prev = v1;
            for i in 0..order - 2 {
                g = crate::graph::pendant_path(&g, prev, 1).expect("in range");
                prev = base + i;
            }
            // Close the chain onto g2's junction.
            LoopWeightedGraph::from_parts(
                g.n(),
                g.edges().chain(std::iter::once((prev, g1.n() + v2))),
                g.loops().iter().map(|(v, w)| (*v, w.clone())),
            )
        }
    };
    joined.map_err(|_| EngineError::PreconditionViolated("join construction".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinBase {
    Coalescence,
    Bridge,
}

/// Outcome of collapsing a path join down to its parity class.
#[derive(Debug, Clone)]
pub struct PathParityReduction {
    pub base: JoinBase,
    /// det(joined by path of the given order) = sign * det(reduced).
    pub sign: i64,
    pub reduced: LoopWeightedGraph,
}

/// Collapses the order-n path join of two graphs by the parity recursion
/// det(G(n)) = -det(G(n-2)): odd orders reduce to the coalescence, even
/// orders to the single bridge edge, with the accumulated sign reported.
pub fn path_parity_reduce(
    g1: &LoopWeightedGraph,
    v1: Vertex,
    g2: &LoopWeightedGraph,
    v2: Vertex,
    order: usize,
) -> Result<PathParityReduction, EngineError> {
    check_loopless(g1)?;
    check_loopless(g2)?;
    if order == 0 {
        return Err(EngineError::PreconditionViolated("path order must be >= 1".into()));
    }
    let hops = (order - 1) / 2;
    let sign = if hops.is_multiple_of(2) { 1 } else { -1 };
    let (base, reduced) = if order % 2 == 1 {
        let g = coalesce(g1, v1, g2, v2)
            .map_err(|_| EngineError::VertexOutOfRange { vertex: v1.max(v2), n: g1.n().max(g2.n()) })?;
        (JoinBase::Coalescence, g)
    } else {
        let g = bridge(g1, v1, g2, v2)
            .map_err(|_| EngineError::VertexOutOfRange { vertex: v1.max(v2), n: g1.n().max(g2.n()) })?;
        (JoinBase::Bridge, g)
    };
    Ok(PathParityReduction { base, sign, reduced })
}

/// Block vertex allocation in the combinatorial determinant formula, aligned
/// with the deterministic block ordering of `decompose`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlphaTuple(pub Vec<usize>);

fn require_block_graph(g: &LoopWeightedGraph) -> Result<BlockDecomposition, EngineError> {
    check_loopless(g)?;
    if g.n() == 0 || !g.is_connected() {
        return Err(EngineError::NotBlockGraph);
    }
    let decomp = decompose(g);
    if !decomp.blocks.iter().all(|b| blocks::block_is_complete(g, b)) {
        return Err(EngineError::NotBlockGraph);
    }
    Ok(decomp)
}

/// All distinct feasible tuples, generated by assigning every cut vertex to
/// exactly one of its incident blocks; each block's entry counts its noncut
/// vertices plus the cut vertices assigned to it. Distinct assignments yield
/// distinct tuples (a collision would force a cycle in the block-cut tree),
/// which the enumeration double-checks.
pub fn enumerate_alpha_tuples(g: &LoopWeightedGraph) -> Result<Vec<AlphaTuple>, EngineError> {
    let decomp = require_block_graph(g)?;
    let k = decomp.blocks.len();
    let noncut: Vec<usize> = (0..k).map(|b| decomp.noncut_count(b)).collect();
    let cuts: Vec<Vertex> = decomp.cut_vertices.iter().collect();
    let choices: Vec<&[usize]> =
        cuts.iter().map(|&v| decomp.vertex_blocks[v].as_slice()).collect();

    let mut tuples = BTreeSet::new();
    let mut assignment_count = 0usize;
    let mut odometer = vec![0usize; cuts.len()];
    loop {
        let mut alpha = noncut.clone();
        for (c, &pick) in odometer.iter().enumerate() {
            alpha[choices[c][pick]] += 1;
        }
        debug_assert_eq!(alpha.iter().sum::<usize>(), g.n());
        for (b, &a) in alpha.iter().enumerate() {
            let (n_i, m_i) = (decomp.block_order(b), decomp.cut_count(b));
            debug_assert!(a <= n_i && a >= n_i - m_i);
        }
        tuples.insert(alpha);
        assignment_count += 1;

        let mut pos = 0;
        loop {
            if pos == odometer.len() {
                debug_assert_eq!(tuples.len(), assignment_count, "tuple collision");
                let tuples: Vec<AlphaTuple> = tuples.into_iter().map(AlphaTuple).collect();
                debug_assert!(tuples_satisfy_subset_condition(&decomp, &tuples));
                return Ok(tuples);
            }
            odometer[pos] += 1;
            if odometer[pos] < choices[pos].len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

// Feasibility side condition: for every nonempty block subset S, the tuple
// mass on S is bounded by the vertex count of the union of those blocks.
// Checked exhaustively for small k in debug builds.
fn tuples_satisfy_subset_condition(decomp: &BlockDecomposition, tuples: &[AlphaTuple]) -> bool {
    let k = decomp.blocks.len();
    if k > 12 {
        return true;
    }
    for mask in 1u32..(1 << k) {
        let mut union = BTreeSet::new();
        for b in 0..k {
            if mask & (1 << b) != 0 {
                union.extend(decomp.blocks[b].iter());
            }
        }
        for t in tuples {
            let total: usize =
                (0..k).filter(|b| mask & (1 << b) != 0).map(|b| t.0[b]).sum();
            if total > union.len() {
                return false;
            }
        }
    }
    true
}

const DIRECT_ENUMERATION_LIMIT: usize = 100_000;

/// Combinatorial determinant of a connected loopless block graph:
/// (-1)^(n-k) * sum over feasible tuples of prod (alpha_i - 1). Small tuple
/// spaces are enumerated directly; larger ones are summed by dynamic
/// programming over the block-cut tree.
pub fn det_block_formula(g: &LoopWeightedGraph) -> Result<BigRational, EngineError> {
    let decomp = require_block_graph(g)?;
    let k = decomp.blocks.len();
    let assignments: usize = decomp
        .cut_vertices
        .iter()
        .map(|v| decomp.vertex_blocks[v].len())
        .try_fold(1usize, |acc, d| acc.checked_mul(d))
        .unwrap_or(usize::MAX);

    let sum = if assignments <= DIRECT_ENUMERATION_LIMIT {
        let tuples = enumerate_alpha_tuples(g)?;
        let mut sum = BigInt::zero();
        for t in &tuples {
            let mut prod = BigInt::one();
            for &a in &t.0 {
                prod *= BigInt::from(a as i64) - 1;
            }
            sum += prod;
        }
        sum
    } else {
        block_tree_tuple_sum(&decomp)
    };

    let sign = if (g.n() - k).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    Ok(BigRational::from_integer(sign * sum))
}

// Sum of prod (alpha_i - 1) over all cut-to-block assignments via the
// block-cut tree. For a block with child cuts, each cut either stays with
// the block (weight: the product of its child blocks' "cut taken away"
// values) or descends into one child block; a generating polynomial in the
// number of cuts kept collects the (noncut + kept - 1) block factor.
fn block_tree_tuple_sum(decomp: &BlockDecomposition) -> BigInt {
    fn block_value(
        decomp: &BlockDecomposition,
        block: usize,
        parent_cut: Option<Vertex>,
    ) -> (BigInt, BigInt) {
        let child_cuts: Vec<Vertex> = decomp.block_cuts[block]
            .iter()
            .copied()
            .filter(|&v| Some(v) != parent_cut)
            .collect();
        // poly[t] = total weight of ways to keep exactly t child cuts here
        let mut poly = vec![BigInt::one()];
        for &cut in &child_cuts {
            let children: Vec<usize> = decomp.vertex_blocks[cut]
                .iter()
                .copied()
                .filter(|&b| b != block)
                .collect();
            let vals: Vec<(BigInt, BigInt)> = children
                .iter()
                .map(|&b| block_value(decomp, b, Some(cut)))
                .collect();
            let product_away: BigInt = vals.iter().map(|(away, _)| away).product();
            let mut descend = BigInt::zero();
            for (i, (_, taken)) in vals.iter().enumerate() {
                let mut term = taken.clone();
                for (j, (away, _)) in vals.iter().enumerate() {
                    if j != i {
                        term *= away;
                    }
                }
                descend += term;
            }
            // multiply poly by (descend + z * product_away)
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (t, coeff) in poly.iter().enumerate() {
                next[t] += coeff * &descend;
                next[t + 1] += coeff * &product_away;
            }
            poly = next;
        }
        let base = decomp.noncut_count(block) as i64;
        let mut without_parent = BigInt::zero();
        let mut with_parent = BigInt::zero();
        for (t, coeff) in poly.iter().enumerate() {
            without_parent += coeff * BigInt::from(base + t as i64 - 1);
            with_parent += coeff * BigInt::from(base + t as i64);
        }
        (without_parent, with_parent)
    }

    block_value(decomp, 0, None).0
}

/// Formats a certificate step for reports.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionStepJson {
    pub kind: StepKind,
    pub removed: Vec<Vertex>,
    pub rank_offset: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm_y_sq: Option<String>,
}

impl From<&ReductionStep> for ReductionStepJson {
    fn from(step: &ReductionStep) -> Self {
        ReductionStepJson {
            kind: step.kind,
            removed: step.removed.iter().collect(),
            rank_offset: step.rank_offset,
            gamma: step.gamma.as_ref().map(ratio::format_pq),
            norm_y_sq: step.norm_y_sq.as_ref().map(ratio::format_pq),
        }
    }
}
