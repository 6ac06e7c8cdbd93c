//! Biconnected decomposition, the block-cut tree, and recognition of the
//! structural graph classes the analysis engines key on.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{induced_delete, LoopWeightedGraph, Vertex, VertexSet};

/// Blocks (maximal 2-connected subgraphs, bridges, or isolated vertices),
/// cut vertices, and the bipartite block-cut incidence.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// For every vertex, the indices of the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
    /// For every block, its cut vertices (the block-cut tree adjacency).
    pub block_cuts: Vec<Vec<Vertex>>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    pub fn block_order(&self, b: usize) -> usize {
        self.blocks[b].len()
    }

    pub fn cut_count(&self, b: usize) -> usize {
        self.block_cuts[b].len()
    }

    pub fn noncut_count(&self, b: usize) -> usize {
        self.block_order(b) - self.cut_count(b)
    }

    /// A pendant block contains exactly one cut vertex of the ambient graph.
    pub fn is_pendant_block(&self, b: usize) -> bool {
        self.cut_count(b) == 1
    }

    pub fn pendant_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.is_pendant_block(b)).collect()
    }

    /// Edges of the bipartite block-cut tree as (block index, cut vertex).
    pub fn block_cut_tree_edges(&self) -> Vec<(usize, Vertex)> {
        let mut out = Vec::new();
        for (b, cuts) in self.block_cuts.iter().enumerate() {
            for &v in cuts {
                out.push((b, v));
            }
        }
        out
    }
}

/// Lowpoint-based biconnected decomposition (iterative, deterministic).
/// Blocks are ordered by minimal vertex, then size, then lexicographically.
pub fn decompose(g: &LoopWeightedGraph) -> BlockDecomposition {
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut raw_blocks: Vec<BTreeSet<Vertex>> = Vec::new();

    // frame: (vertex, parent, next neighbor index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            raw_blocks.push(BTreeSet::from([root]));
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, root, 0));
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[u].len() {
                let w = adj[u][*idx];
                *idx += 1;
                if w == parent && u != root {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut verts = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.insert(a);
                            verts.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        raw_blocks.push(verts);
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty());
    }

    let mut blocks: Vec<VertexSet> =
        raw_blocks.into_iter().map(|s| s.into_iter().collect()).collect();
    blocks.sort_by(|a, b| {
        let ka = (a.as_slice()[0], a.len());
        let kb = (b.as_slice()[0], b.len());
        ka.cmp(&kb).then_with(|| a.cmp(b))
    });

    let mut vertex_blocks = vec![Vec::new(); n];
    for (bi, block) in blocks.iter().enumerate() {
        for v in block.iter() {
            vertex_blocks[v].push(bi);
        }
    }
    let cut_vertices: VertexSet =
        (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
    let block_cuts: Vec<Vec<Vertex>> = blocks
        .iter()
        .map(|block| block.iter().filter(|&v| vertex_blocks[v].len() >= 2).collect())
        .collect();

    BlockDecomposition { blocks, cut_vertices, vertex_blocks, block_cuts }
}

/// True iff every block induces a complete subgraph.
pub fn is_block_graph(g: &LoopWeightedGraph) -> bool {
    decompose(g).blocks.iter().all(|block| block_is_complete(g, block))
}

pub(crate) fn block_is_complete(g: &LoopWeightedGraph, block: &VertexSet) -> bool {
    let vs = block.as_slice();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Per-block structure summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockInfo {
    pub order: usize,
    pub cut_count: usize,
    pub noncut_count: usize,
    pub pendant: bool,
}

/// Structural class flags. `is_b31` implies `is_k2_forbidden` implies
/// `is_block_graph`; the b31/p1 flags are only meaningful (and only set) for
/// block graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub is_block_graph: bool,
    pub is_k2_forbidden: bool,
    pub is_b31: bool,
    pub is_p1: bool,
    pub is_tree: bool,
    pub blocks: Vec<BlockInfo>,
}

pub fn classify(g: &LoopWeightedGraph) -> ClassFlags {
    let decomp = decompose(g);
    let blocks: Vec<BlockInfo> = (0..decomp.blocks.len())
        .map(|b| BlockInfo {
            order: decomp.block_order(b),
            cut_count: decomp.cut_count(b),
            noncut_count: decomp.noncut_count(b),
            pendant: decomp.is_pendant_block(b),
        })
        .collect();
    let is_bg = decomp.blocks.iter().all(|block| block_is_complete(g, block));
    let connected = g.n() > 0 && g.is_connected();
    let is_k2_forbidden =
        is_bg && !blocks.is_empty() && blocks.iter().all(|b| b.order >= 3);
    let is_b31 = is_k2_forbidden && connected && blocks.iter().all(|b| b.noncut_count >= 1);
    let is_tree = connected && g.edge_count() == g.n() - 1;
    let is_p1 = is_bg && connected && p1_peeling_accepts(g);
    ClassFlags { is_block_graph: is_bg, is_k2_forbidden, is_b31, is_p1, is_tree, blocks }
}

/// A maximal dangling chain: `vertices` runs from a leaf inward through
/// degree-2 vertices; `anchor` is the first vertex of degree >= 3, or `None`
/// when the whole component is a bare path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantChain {
    pub vertices: Vec<Vertex>,
    pub anchor: Option<Vertex>,
}

/// All maximal pendant chains, one per leaf (a bare path component yields a
/// single chain claimed by its smaller leaf).
pub fn pendant_chains(g: &LoopWeightedGraph) -> Vec<PendantChain> {
    let adj = g.adjacency_lists();
    let mut consumed = vec![false; g.n()];
    let mut chains = Vec::new();
    for leaf in 0..g.n() {
        if adj[leaf].len() != 1 || consumed[leaf] {
            continue;
        }
        let mut chain = vec![leaf];
        consumed[leaf] = true;
        let mut prev = leaf;
        let mut cur = adj[leaf][0];
        let anchor = loop {
            match adj[cur].len() {
                1 => {
                    chain.push(cur);
                    consumed[cur] = true;
                    break None;
                }
                2 => {
                    chain.push(cur);
                    consumed[cur] = true;
                    let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                    prev = cur;
                    cur = next;
                }
                _ => break Some(cur),
            }
        };
        chains.push(PendantChain { vertices: chain, anchor });
    }
    chains
}

// Peeling recognizer for graphs built by hanging at most one pendant path per
// attachment vertex off a core whose blocks all keep >= 2 noncut vertices.
// The caller has already checked that the graph is a connected block graph.
//
// Attachments at noncut vertices of the core are accepted only when they keep
// the stripping argument intact: removing every even-order pendant path
// together with its attachment vertex (and the dangling part of each
// odd-order path) must leave a disjoint union of single edges and components
// whose blocks all have order >= 3 and a noncut vertex. Without that final
// check a second attachment can drain a core block down to one vertex and
// the graph can be singular.
fn p1_peeling_accepts(g: &LoopWeightedGraph) -> bool {
    if g.n() == 0 {
        return false;
    }
    let chains = pendant_chains(g);
    if chains.iter().any(|c| c.anchor.is_none()) {
        // The whole graph is a bare path; only the single edge qualifies.
        return g.n() == 2;
    }
    let mut anchors = BTreeSet::new();
    for chain in &chains {
        if !anchors.insert(chain.anchor.unwrap()) {
            return false; // two pendant paths at one attachment vertex
        }
    }
    let stripped: VertexSet =
        chains.iter().flat_map(|c| c.vertices.iter().copied()).collect();
    let (core, core_map) = induced_delete(g, &stripped).expect("chain vertices are in range");
    if core.n() == 0 {
        return false;
    }
    let decomp = decompose(&core);
    if !(0..decomp.blocks.len()).all(|b| decomp.noncut_count(b) >= 2) {
        return false;
    }

    // An even-order pendant path (odd chain) strips its anchor as well.
    let even_anchors: VertexSet = chains
        .iter()
        .filter(|c| c.vertices.len() % 2 == 1)
        .map(|c| core_map[&c.anchor.unwrap()])
        .collect();
    let (rest, _) = induced_delete(&core, &even_anchors).expect("anchors live in the core");
    let rest_decomp = decompose(&rest);
    let component_size: std::collections::BTreeMap<Vertex, usize> = rest
        .components()
        .into_iter()
        .flat_map(|comp| {
            let size = comp.len();
            comp.into_iter().map(move |v| (v, size))
        })
        .collect();
    (0..rest_decomp.blocks.len()).all(|b| {
        let block = &rest_decomp.blocks[b];
        match block.len() {
            0 | 1 => false,
            2 => component_size[&block.as_slice()[0]] == 2,
            _ => rest_decomp.noncut_count(b) >= 1,
        }
    })
}

/// Brute-force articulation check for tests: removal increases the number of
/// connected components.
pub fn is_cut_vertex_by_removal(g: &LoopWeightedGraph, v: Vertex) -> bool {
    let before = g.components().len();
    let (h, _) = induced_delete(g, &VertexSet::new(vec![v])).expect("vertex in range");
    h.components().len() > before
}
