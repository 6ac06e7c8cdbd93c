//! Isomorph-free generation of connected block graphs.
//!
//! Every connected block graph arises from a single vertex by repeatedly
//! coalescing a pendant complete block at one existing vertex (its block-cut
//! tree always has a leaf block), so growing by pendant-block attachment and
//! deduplicating by canonical form enumerates each isomorphism class exactly
//! once. With the K2-forbidden filter only blocks of order >= 3 are attached,
//! and the single-vertex seed itself is not emitted.

use std::collections::BTreeMap;

use crate::graph::{attach_complete_block, LoopWeightedGraph};
use crate::lab::canon::{canonical_form, CanonicalForm};

/// All canonical representatives with the same vertex count, sorted by
/// canonical form.
#[derive(Debug, Clone)]
pub struct Tier {
    pub n: usize,
    pub graphs: Vec<LoopWeightedGraph>,
}

/// Generates one tier from the already-complete earlier tiers.
pub(crate) fn extend_tier(
    earlier: &[(usize, Vec<LoopWeightedGraph>)],
    n: usize,
    k2_forbidden: bool,
) -> Vec<LoopWeightedGraph> {
    let min_block = if k2_forbidden { 3 } else { 2 };
    if n == 1 {
        return vec![LoopWeightedGraph::empty(1)];
    }
    let mut found: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
    for &(p, ref graphs) in earlier {
        let b = n + 1 - p;
        if b < min_block || p + b - 1 != n {
            continue;
        }
        for parent in graphs {
            for at in 0..parent.n() {
                let child = attach_complete_block(parent, at, b).expect("at < n");
                let cf = canonical_form(&child).expect("enumeration graphs are loopless");
                found.entry(cf).or_insert(());
            }
        }
    }
    found.into_keys().map(|cf| cf.to_graph()).collect()
}

/// All tiers 1..=n_max. Tier `n` lists one canonical representative per
/// isomorphism class of connected block graphs on `n` vertices; with
/// `k2_forbidden` every block has order >= 3 (so tiers 1 and 2 are empty).
pub fn enumerate_tiers(n_max: usize, k2_forbidden: bool) -> Vec<Tier> {
    let mut substrate: Vec<(usize, Vec<LoopWeightedGraph>)> = Vec::new();
    for n in 1..=n_max {
        let graphs = extend_tier(&substrate, n, k2_forbidden);
        substrate.push((n, graphs));
    }
    substrate
        .into_iter()
        .map(|(n, graphs)| {
            // the single-vertex seed is substrate only under the filter
            if k2_forbidden && n == 1 {
                Tier { n, graphs: Vec::new() }
            } else {
                Tier { n, graphs }
            }
        })
        .collect()
}

/// Stream of enumerated graphs in (n, canonical form) order.
pub fn enumerate_block_graphs(
    n_max: usize,
    k2_forbidden: bool,
) -> impl Iterator<Item = LoopWeightedGraph> {
    enumerate_tiers(n_max, k2_forbidden).into_iter().flat_map(|t| t.graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{decompose, is_block_graph};
    use crate::lab::canon::are_isomorphic_by_permutation;

    #[test]
    fn small_forbidden_tiers() {
        let tiers = enumerate_tiers(5, true);
        let counts: Vec<usize> = tiers.iter().map(|t| t.graphs.len()).collect();
        // n=3: K3; n=4: K4; n=5: K5 and two triangles at a cut vertex
        assert_eq!(counts, vec![0, 0, 1, 1, 2]);
        for tier in &tiers {
            for g in &tier.graphs {
                assert!(is_block_graph(g));
                let d = decompose(g);
                assert!(d.blocks.iter().all(|b| b.len() >= 3));
            }
        }
    }

    #[test]
    fn forbidden_tier_five_membership() {
        use crate::graph::attach_complete_block;
        let tiers = enumerate_tiers(5, true);
        let forms: Vec<_> = tiers[4]
            .graphs
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let k5 = canonical_form(&LoopWeightedGraph::complete(5)).unwrap();
        let two_triangles = canonical_form(
            &attach_complete_block(&LoopWeightedGraph::complete(3), 0, 3).unwrap(),
        )
        .unwrap();
        assert!(forms.contains(&k5));
        assert!(forms.contains(&two_triangles));
    }

    #[test]
    fn small_allowed_tiers() {
        let tiers = enumerate_tiers(3, false);
        let counts: Vec<usize> = tiers.iter().map(|t| t.graphs.len()).collect();
        // K1; K2; P3 and K3
        assert_eq!(counts, vec![1, 1, 2]);
    }

    #[test]
    fn emitted_graphs_are_block_graphs_and_connected() {
        for g in enumerate_block_graphs(6, false) {
            assert!(g.is_connected());
            assert!(is_block_graph(&g));
            assert!(g.is_loopless());
        }
    }

    #[test]
    fn no_two_emitted_graphs_isomorphic() {
        let tiers = enumerate_tiers(6, false);
        for tier in &tiers {
            for (i, a) in tier.graphs.iter().enumerate() {
                for b in &tier.graphs[i + 1..] {
                    assert!(!are_isomorphic_by_permutation(a, b));
                }
            }
        }
    }

    #[test]
    fn complete_against_bruteforce_up_to_5() {
        // 2^(n(n-1)/2) labeled graphs, filtered to connected block graphs and
        // deduplicated by canonical form: must match the generator exactly.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut brute = std::collections::BTreeSet::new();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = LoopWeightedGraph::from_parts(n, edges, []).unwrap();
                if g.is_connected() && is_block_graph(&g) {
                    brute.insert(canonical_form(&g).unwrap());
                }
            }
            let tier = enumerate_tiers(n, false).pop().unwrap();
            let generated: std::collections::BTreeSet<_> = tier
                .graphs
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(generated, brute, "n = {n}");
        }
    }
}
