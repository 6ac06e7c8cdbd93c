//! Acceptance suite: one test per criterion, each printing a PASS line when
//! its check holds exactly (all comparisons are exact rational equalities;
//! there are no tolerances to tune).
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num::{BigRational, Zero};
use once_cell::sync::Lazy;

use blockgraph::blocks::{classify, decompose, is_block_graph};
use blockgraph::engines::{
    det_block_formula, join_by_path, reduce_to_fixpoint, StepKind,
};
use blockgraph::families::{
    generate, nmk_is_singular, star_diag_dominant_sufficient, star_is_nonsingular, FamilySpec,
    StarSpec,
};
use blockgraph::fixtures;
use blockgraph::graph::{pendant_path, LoopWeightedGraph, VertexSet};
use blockgraph::io::{parse_graph6, write_graph6};
use blockgraph::lab::random::{below, random_b31_graph, random_block_graph, rng};
use blockgraph::lab::{enumerate_block_graphs, test_conjecture_1, test_conjecture_2};
use blockgraph::linalg::{adjacency_matrix, det_graph, rank_graph};

/// Every connected loopless block graph on up to 8 vertices, one per
/// isomorphism class (shared by several criteria).
static CORPUS_8: Lazy<Vec<LoopWeightedGraph>> =
    Lazy::new(|| enumerate_block_graphs(8, false).collect());

#[test]
fn criterion_01_engine_equivalence() {
    assert_eq!(CORPUS_8.len(), 263);
    for g in CORPUS_8.iter() {
        let dense = det_graph(g);
        let formula = det_block_formula(g).expect("corpus graphs qualify");
        assert_eq!(formula, dense, "engines disagree on {}", write_graph6(g).unwrap());
        // Same corpus also pins the two dense elimination routes to each other.
        let a = adjacency_matrix(g);
        assert_eq!(
            BigRational::from_integer(a.det_bareiss_integer()),
            a.det_gauss_rational()
        );
    }
    // Larger random instances exercise the block-cut tree summation path.
    let mut r = rng(101);
    for _ in 0..200 {
        let n = 9 + below(&mut r, 22);
        let g = random_block_graph(&mut r, n, 6);
        assert_eq!(det_block_formula(&g).unwrap(), det_graph(&g));
    }
    println!("criterion 01 engine equivalence: PASS");
}

#[test]
fn criterion_02_reduction_soundness() {
    let mut checked_steps = 0usize;
    let mut check = |g: &LoopWeightedGraph| {
        let cert = reduce_to_fixpoint(g);
        assert_eq!(
            cert.total_rank(),
            rank_graph(g),
            "rank accounting failed on {}",
            write_graph6(g).unwrap()
        );
        for step in &cert.steps {
            if step.kind == StepKind::PendantBlock {
                let gamma = step.gamma.as_ref().expect("block steps carry gamma");
                assert!(
                    gamma < &BigRational::from_integer((-1).into()),
                    "gamma {gamma} not < -1"
                );
                checked_steps += 1;
            }
        }
    };
    for g in CORPUS_8.iter() {
        check(g);
    }
    let mut r = rng(202);
    for _ in 0..200 {
        let n = 9 + below(&mut r, 22);
        check(&random_block_graph(&mut r, n, 6));
    }
    assert!(checked_steps > 100, "corpus exercised only {checked_steps} block steps");
    println!("criterion 02 reduction soundness: PASS ({checked_steps} gamma steps)");
}

#[test]
fn criterion_03_b31_nonsingular() {
    let mut r = rng(303);
    for i in 0..500 {
        let g = random_b31_graph(&mut r, 40, 7);
        assert!(g.n() <= 40);
        assert!(classify(&g).is_b31);
        assert!(
            !det_graph(&g).is_zero(),
            "instance {i} is singular: {}",
            write_graph6(&g).unwrap()
        );
    }
    println!("criterion 03 b31 theorem (500 instances <= 40 vertices): PASS");
}

#[test]
fn criterion_04_nmk_criterion() {
    for n in 2..=5usize {
        for m in 3..=5usize {
            for k in 1..=3usize {
                let g = generate(&FamilySpec::Nmk { n, m, k }).unwrap();
                assert_eq!(g.n(), n * k * (m - 1) + n);
                let predicted = nmk_is_singular(n, m, k).unwrap();
                let actual = det_graph(&g).is_zero();
                assert_eq!(predicted, actual, "criterion wrong on ({n},{m},{k})");
            }
        }
    }
    // Figure fixtures: the full two-per-vertex K4 arrangement is singular,
    // the seven-pendant variant is nonsingular.
    let fig_b = fixtures::nmk_4_4_2_figure();
    assert_eq!(fig_b.n(), 28);
    assert!(det_graph(&fig_b).is_zero());
    let fig_c = fixtures::k4_core_seven_pendant_k4();
    assert_eq!(fig_c.n(), 25);
    assert!(!det_graph(&fig_c).is_zero());
    println!("criterion 04 (n,m,k) singularity criterion: PASS");
}

#[test]
fn criterion_05_exact_sum_criterion() {
    let menu: [&[usize]; 5] = [&[3], &[4], &[3, 3], &[3, 4], &[4, 4]];
    let mut tested = 0;
    for n in 2..=3usize {
        let mut picks = vec![0usize; n];
        loop {
            let attachments: Vec<Vec<usize>> =
                picks.iter().map(|&p| menu[p].to_vec()).collect();
            let star = StarSpec { n, attachments };
            let predicted = star_is_nonsingular(&star).unwrap();
            let g = generate(&FamilySpec::GeneralizedStar(star.clone())).unwrap();
            assert_eq!(
                predicted,
                !det_graph(&g).is_zero(),
                "exact-sum criterion wrong on {star:?}"
            );
            // Dominance is sufficient, never contradicting the exact test.
            let uniform = star.attachments.iter().all(|o| o.iter().all(|&m| m == o[0]));
            if uniform && star_diag_dominant_sufficient(&star).unwrap() {
                assert!(predicted, "dominance implied nonsingularity fails on {star:?}");
            }
            tested += 1;

            let mut pos = 0;
            loop {
                if pos == n {
                    break;
                }
                picks[pos] += 1;
                if picks[pos] < menu.len() {
                    break;
                }
                picks[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    println!("criterion 05 exact-sum and dominance criteria ({tested} stars): PASS");
}

#[test]
fn criterion_06_pendant_path_theorem() {
    let mut r = rng(606);

    // Part 1: rank identity; part 2: singularity equivalence after stripping.
    for _ in 0..100 {
        let base_n = 3 + below(&mut r, 6);
        let base = random_block_graph(&mut r, base_n, 4);
        let t = 1 + below(&mut r, base.n().min(3));
        let mut g = base.clone();
        let mut attach_at: Vec<usize> = (0..base.n()).collect();
        let mut stripped: Vec<usize> = Vec::new();
        let mut total_order = 0;
        for _ in 0..t {
            let idx = below(&mut r, attach_at.len());
            let v = attach_at.swap_remove(idx);
            let order = [2, 4, 6][below(&mut r, 3)];
            let start = g.n();
            g = pendant_path(&g, v, order - 1).unwrap();
            stripped.extend(v..=v); // the attachment vertex strips too
            stripped.extend(start..start + order - 1);
            total_order += order;
        }
        let (rest, _) =
            blockgraph::graph::induced_delete(&g, &VertexSet::new(stripped)).unwrap();
        assert_eq!(rank_graph(&g), total_order + rank_graph(&rest), "part 1");
        assert_eq!(
            det_graph(&g).is_zero(),
            det_graph(&rest).is_zero(),
            "part 2"
        );
    }

    // Part 3: a second even path at the same vertex forces singularity.
    for _ in 0..100 {
        let base_n = 3 + below(&mut r, 6);
        let base = random_block_graph(&mut r, base_n, 4);
        let v = below(&mut r, base.n());
        let first = [2, 4][below(&mut r, 2)];
        let second = [2, 4][below(&mut r, 2)];
        let g = pendant_path(&base, v, first - 1).unwrap();
        let g = pendant_path(&g, v, second - 1).unwrap();
        assert!(det_graph(&g).is_zero(), "part 3");
    }
    println!("criterion 06 pendant-path theorem parts 1-3 (100 instances each): PASS");
}

#[test]
fn criterion_07_path_parity_sign_law() {
    let mut r = rng(707);
    for _ in 0..50 {
        let (n1, n2) = (2 + below(&mut r, 5), 2 + below(&mut r, 5));
        let g1 = random_block_graph(&mut r, n1, 4);
        let g2 = random_block_graph(&mut r, n2, 4);
        let v1 = below(&mut r, g1.n());
        let v2 = below(&mut r, g2.n());
        for order in 3..=8usize {
            let big = det_graph(&join_by_path(&g1, v1, &g2, v2, order).unwrap());
            let small = det_graph(&join_by_path(&g1, v1, &g2, v2, order - 2).unwrap());
            assert_eq!(big, -small, "sign law fails at order {order}");
        }
    }
    println!("criterion 07 path-parity sign law (50 pairs, orders 3..=8): PASS");
}

#[test]
fn criterion_08_conjecture_one_sweep() {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .expect("worker pool");
    let report = pool.install(|| test_conjecture_1(11));
    assert!(report.complete, "sweep must complete");
    assert!(
        report.counterexamples.is_empty(),
        "counterexample found: {:?}",
        report.counterexamples
    );
    assert_eq!(report.tiers.iter().map(|t| t.n).collect::<Vec<_>>(), (3..=11).collect::<Vec<_>>());
    assert!(report.tiers.iter().all(|t| t.max_nullity <= 1));
    let total: u64 = report.tiers.iter().map(|t| t.count).sum();
    println!(
        "criterion 08 conjecture 1 sweep (n <= 11, {total} graphs, max nullity {}): PASS",
        report.tiers.iter().map(|t| t.max_nullity).max().unwrap()
    );
}

#[test]
fn criterion_09_conjecture_two_sweep() {
    let report = test_conjecture_2(4, true, 0, 0);
    assert!(report.complete, "exhaustive sweep must complete");
    assert!(
        report.counterexamples.is_empty(),
        "counterexample found: {:?}",
        report.counterexamples
    );
    let total: u64 = report.tiers.iter().map(|t| t.count).sum();
    assert!(total > 0);
    println!("criterion 09 conjecture 2 exhaustive sweep (parts <= 4, {total} joins): PASS");
}

#[test]
fn criterion_10_fixture_fidelity() {
    let nse = fixtures::cycle_bridge_paw();
    assert!(det_graph(&nse).is_zero(), "bridged cycle/paw fixture must be singular");
    assert!(!is_block_graph(&nse));

    let b31 = fixtures::b31_two_pendant_k4();
    assert!(classify(&b31).is_b31);
    assert!(!det_graph(&b31).is_zero());

    let tree = fixtures::tree_of_b31_star();
    assert!(!det_graph(&tree).is_zero());
    assert!(is_block_graph(&tree));
    // Every block of order >= 3 keeps a noncut vertex after bridging, and
    // the bridge blocks are disjoint: the tree construction's hypothesis.
    let d = decompose(&tree);
    for b in 0..d.blocks.len() {
        if d.block_order(b) >= 3 {
            assert!(d.noncut_count(b) >= 1);
        }
    }
    println!("criterion 10 fixture fidelity: PASS");
}

#[test]
fn criterion_11_graph6_roundtrip_on_corpus() {
    for g in CORPUS_8.iter() {
        let text = write_graph6(g).unwrap();
        let back = parse_graph6(&text).unwrap();
        assert_eq!(&back, g, "roundtrip failed for {text}");
        assert_eq!(write_graph6(&back).unwrap(), text);
    }
    println!("criterion 11 graph6 roundtrip ({} graphs): PASS", CORPUS_8.len());
}
