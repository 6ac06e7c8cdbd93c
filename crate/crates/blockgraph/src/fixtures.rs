//! Committed reference graphs used across the test suites. Each constructor
//! is mirrored by an edge-list JSON file under `fixtures/`; a test pins the
//! two representations together.

use crate::graph::{attach_complete_block, LoopWeightedGraph};

/// K4 core with two pendant K4 blocks coalesced at three of the four core
/// vertices (22 vertices). Every block keeps a noncut vertex.
pub fn b31_two_pendant_k4() -> LoopWeightedGraph {
    let mut g = LoopWeightedGraph::complete(4);
    for core in 0..3 {
        for _ in 0..2 {
            g = attach_complete_block(&g, core, 4).expect("core vertex in range");
        }
    }
    g
}

/// K4 core with two pendant K4 blocks at every core vertex (28 vertices);
/// the central block retains no noncut vertex and the graph is singular.
pub fn nmk_4_4_2_figure() -> LoopWeightedGraph {
    let mut g = LoopWeightedGraph::complete(4);
    for core in 0..4 {
        for _ in 0..2 {
            g = attach_complete_block(&g, core, 4).expect("core vertex in range");
        }
    }
    g
}

/// K4 core carrying two pendant K4 blocks at three core vertices and a single
/// pendant K4 at the fourth (25 vertices); nonsingular although the central
/// block has no noncut vertex.
pub fn k4_core_seven_pendant_k4() -> LoopWeightedGraph {
    let mut g = b31_two_pendant_k4();
    g = attach_complete_block(&g, 3, 4).expect("core vertex in range");
    g
}

/// Three K4 blocks and two K3 blocks with single pendant paths hanging at
/// three distinct attachment vertices (18 vertices): one path of order 3 at
/// vertex 5 and paths of order 2 at vertices 0 and 2.
pub fn p1_mixed_pendant_paths() -> LoopWeightedGraph {
    LoopWeightedGraph::from_parts(
        18,
        [
            // K4 on {0,1,2,3}
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
            // K4 on {4,5,6,7}
            (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
            // K3 on {5,8,9}
            (5, 8), (5, 9), (8, 9),
            // path 5-10-17
            (5, 10), (10, 17),
            // K3 on {2,11,12}
            (2, 11), (2, 12), (11, 12),
            // pendant edge 2-13
            (2, 13),
            // K4 on {0,4,14,15}
            (0, 4), (0, 14), (0, 15), (4, 14), (4, 15), (14, 15),
            // pendant edge 0-16
            (0, 16),
        ],
        [],
    )
    .expect("static edge list is valid")
}

/// A 5-cycle and a triangle-with-pendant-edge joined by a bridge
/// (9 vertices). Both sides are nonsingular, the bridged graph is singular,
/// and the cycle block keeps it from being a block graph.
pub fn cycle_bridge_paw() -> LoopWeightedGraph {
    LoopWeightedGraph::from_parts(
        9,
        [
            // C5 on {0..4}
            (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
            // triangle {6,7,8} with pendant edge 5-6
            (5, 6), (6, 7), (7, 8), (6, 8),
            // bridge
            (0, 5),
        ],
        [],
    )
    .expect("static edge list is valid")
}

/// Star-shaped tree of four parts joined by three bridge edges
/// (22 vertices): a central K4-plus-two-K3 part, two K3 leaves, and a second
/// K4-plus-two-K3 part. Every block of order >= 3 keeps a noncut vertex after
/// the bridges are added, and no two bridges share a vertex.
pub fn tree_of_b31_star() -> LoopWeightedGraph {
    LoopWeightedGraph::from_parts(
        22,
        [
            // part A: K4 on {0,1,2,3} with K3s at 0 and 2
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
            (0, 6), (0, 7), (6, 7),
            (2, 4), (2, 5), (4, 5),
            // part B: K3 on {8,9,10}
            (8, 9), (8, 10), (9, 10),
            // part C: K3 on {19,20,21}
            (19, 20), (19, 21), (20, 21),
            // part D: K4 on {11,12,13,14} with K3s at 11 and 12
            (11, 12), (11, 13), (11, 14), (12, 13), (12, 14), (13, 14),
            (12, 15), (12, 16), (15, 16),
            (11, 17), (11, 18), (17, 18),
            // bridges A-B, A-D, A-C
            (5, 10), (6, 11), (1, 20),
        ],
        [],
    )
    .expect("static edge list is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_edge_list_json, write_edge_list_json};

    #[test]
    fn vertex_counts() {
        assert_eq!(b31_two_pendant_k4().n(), 22);
        assert_eq!(nmk_4_4_2_figure().n(), 28);
        assert_eq!(k4_core_seven_pendant_k4().n(), 25);
        assert_eq!(p1_mixed_pendant_paths().n(), 18);
        assert_eq!(cycle_bridge_paw().n(), 9);
        assert_eq!(tree_of_b31_star().n(), 22);
    }

    #[test]
    fn deleting_the_paw_side_leaves_the_cycle() {
        let g = cycle_bridge_paw();
        let (rest, _) = crate::graph::induced_delete(
            &g,
            &crate::graph::VertexSet::new(vec![5, 6, 7, 8]),
        )
        .unwrap();
        assert_eq!(rest.components().len(), 1);
        assert_eq!(
            crate::lab::canonical_form(&rest).unwrap(),
            crate::lab::canonical_form(&crate::graph::LoopWeightedGraph::cycle(5)).unwrap()
        );
    }

    #[test]
    fn committed_files_match_constructors() {
        let cases = [
            (include_str!("../fixtures/b31_two_pendant_k4.json"), b31_two_pendant_k4()),
            (include_str!("../fixtures/nmk_4_4_2.json"), nmk_4_4_2_figure()),
            (
                include_str!("../fixtures/k4_core_seven_pendant_k4.json"),
                k4_core_seven_pendant_k4(),
            ),
            (include_str!("../fixtures/p1_mixed_pendant_paths.json"), p1_mixed_pendant_paths()),
            (include_str!("../fixtures/cycle_bridge_paw.json"), cycle_bridge_paw()),
            (include_str!("../fixtures/tree_of_b31_star.json"), tree_of_b31_star()),
        ];
        for (text, expected) in cases {
            let parsed = parse_edge_list_json(text).expect("fixture file parses");
            assert_eq!(parsed, expected);
            assert_eq!(write_edge_list_json(&parsed).trim(), text.trim());
        }
    }
}
