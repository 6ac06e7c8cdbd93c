//! Seeded random instance generators for the property suites. All draws go
//! through a counter-based stream cipher, so a fixed seed reproduces the same
//! corpus on any platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocks::decompose;
use crate::graph::{attach_complete_block, LoopWeightedGraph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn below(rng: &mut impl RngCore, n: usize) -> usize {
    debug_assert!(n > 0);
    (rng.next_u64() % n as u64) as usize
}

/// Connected block graph grown by pendant-block attachment until the vertex
/// budget is spent (blocks of order 2..=max_block).
pub fn random_block_graph(
    rng: &mut impl RngCore,
    n_target: usize,
    max_block: usize,
) -> LoopWeightedGraph {
    assert!(n_target >= 1 && max_block >= 2);
    let mut g = LoopWeightedGraph::empty(1);
    while g.n() < n_target {
        let cap = max_block.min(n_target - g.n() + 1);
        let order = 2 + below(rng, cap - 1);
        let at = below(rng, g.n());
        g = attach_complete_block(&g, at, order).expect("attachment vertex in range");
    }
    g
}

/// Block graph in which every block has order >= 3 and keeps at least one
/// noncut vertex: blocks are only attached at vertices that are already cut
/// vertices or whose block retains another noncut vertex.
pub fn random_b31_graph(
    rng: &mut impl RngCore,
    n_target: usize,
    max_block: usize,
) -> LoopWeightedGraph {
    assert!(n_target >= 3 && max_block >= 3);
    let first = 3 + below(rng, max_block.min(n_target) - 2);
    let mut g = LoopWeightedGraph::complete(first);
    loop {
        let cap = max_block.min(n_target.saturating_sub(g.n()) + 1);
        if cap < 3 {
            return g;
        }
        let eligible = attachment_vertices(&g, 2);
        let at = eligible[below(rng, eligible.len())];
        let order = 3 + below(rng, cap - 2);
        g = attach_complete_block(&g, at, order).expect("attachment vertex in range");
    }
}

/// Block graph whose blocks all have order >= 3 and keep at least two noncut
/// vertices, the base class for pendant-path constructions.
pub fn random_two_noncut_core(
    rng: &mut impl RngCore,
    n_target: usize,
    max_block: usize,
) -> LoopWeightedGraph {
    assert!(n_target >= 3 && max_block >= 3);
    let first = 3 + below(rng, max_block.min(n_target) - 2);
    let mut g = LoopWeightedGraph::complete(first);
    loop {
        let cap = max_block.min(n_target.saturating_sub(g.n()) + 1);
        if cap < 3 {
            return g;
        }
        let eligible = attachment_vertices(&g, 3);
        let at = eligible[below(rng, eligible.len())];
        let order = 3 + below(rng, cap - 2);
        g = attach_complete_block(&g, at, order).expect("attachment vertex in range");
    }
}

// Vertices where a new pendant block may be coalesced without dropping any
// block's noncut count below `min_noncut - 1` (attaching at a noncut vertex
// turns it into a cut vertex of its block; cut vertices are always safe).
fn attachment_vertices(g: &LoopWeightedGraph, min_noncut: usize) -> Vec<Vertex> {
    let d = decompose(g);
    let mut out = Vec::new();
    for v in 0..g.n() {
        if d.is_cut_vertex(v) {
            out.push(v);
        } else {
            let b = d.vertex_blocks[v][0];
            if d.noncut_count(b) >= min_noncut {
                out.push(v);
            }
        }
    }
    out
}
