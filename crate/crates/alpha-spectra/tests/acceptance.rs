//! The repository's acceptance gate: twelve numbered checks, one test each,
//! with every tolerance pinned as a named constant. A failing check prints
//! which quantity broke and by how much.
//!
//! Check 7 is expected to stay red: one catalog entry (L-C5.4) is unsound at
//! small alpha, the library reports it honestly, and the failure message
//! names it. See the README's acceptance section.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use alpha_spectra::bounds::{self, CatalogId, Tolerance};
use alpha_spectra::canon::{canonical_key, connected_graphs};
use alpha_spectra::graph::{Family, Graph};
use alpha_spectra::graph6;
use alpha_spectra::invariants::{
    is_k3_free_and_c4_free, matching_number, matching_number_bruteforce, nullity,
};
use alpha_spectra::search::{
    check_conjecture_1_3, filter_degree_sequence, generate_trees, tree_multiset_feasible,
    T55_CLASS_A, T55_CLASS_B, T55_CLASS_C,
};
use alpha_spectra::spectra::{
    alpha_spectrum, build_matrix, cosine_sum, path_sk_closed_form, sk_alpha, AlphaValue,
    MatrixKind, PathFormPart,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tolerance for the three published minimum values (checks 1-3).
const PUBLISHED_VALUE_TOL: f64 = 1e-4;
/// Budget for each of the three class minima.
const CLASS_MINIMUM_BUDGET: Duration = Duration::from_secs(5);
/// Budget for the full 551-tree census.
const TREE_CENSUS_BUDGET: Duration = Duration::from_secs(60);
/// Budget for the soundness sweep.
const SWEEP_BUDGET: Duration = Duration::from_secs(600);
/// Closed-form and formula agreement (checks 5 first part, 6).
const CLOSED_FORM_TOL: f64 = 1e-9;
/// Closed form of the cosine partial sum vs direct summation (check 5).
const COSINE_SUM_TOL: f64 = 1e-12;
/// Violation threshold for the soundness sweep (check 7).
const SWEEP_EPS: f64 = 1e-9;
/// Equality-witness slack (check 8) and identity agreement (check 9).
const WITNESS_TOL: f64 = 1e-8;
/// Allowed backwards drift for the monotonicity scan (check 10).
const MONOTONE_TOL: f64 = 1e-9;

fn alpha(v: f64) -> AlphaValue {
    AlphaValue::new(v).expect("test parameter in [0, 1]")
}

fn s2_signless(g: &Graph) -> f64 {
    build_matrix(g, MatrixKind::SignlessLaplacian)
        .eigenvalues()
        .expect("small symmetric matrix converges")
        .s_k(2)
        .expect("k = 2 is valid for n = 12")
}

fn min_s2_signless(graphs: &[Graph]) -> f64 {
    graphs.iter().map(s2_signless).fold(f64::INFINITY, f64::min)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are in range")
}

#[test]
fn criterion_01_heavy_center_class_minimum() {
    let start = Instant::now();
    let trees = generate_trees(12).expect("12 is under the size guard");
    let class = filter_degree_sequence(&trees, T55_CLASS_A);
    assert!(!class.is_empty(), "the degree multiset with a 4-vertex is realizable");
    let min = min_s2_signless(&class);
    assert!(
        (min - 8.57037).abs() <= PUBLISHED_VALUE_TOL,
        "class minimum {min} differs from 8.57037 by more than {PUBLISHED_VALUE_TOL}"
    );
    assert!(start.elapsed() < CLASS_MINIMUM_BUDGET, "took {:?}", start.elapsed());
}

#[test]
fn criterion_02_twin_cubic_classes_minimum() {
    let start = Instant::now();
    let trees = generate_trees(12).expect("12 is under the size guard");
    let mut class = Vec::new();
    let mut feasible_multisets = 0;
    for multiset in T55_CLASS_B {
        if tree_multiset_feasible(multiset) {
            feasible_multisets += 1;
            class.extend(filter_degree_sequence(&trees, multiset));
        }
    }
    assert_eq!(feasible_multisets, 4, "one of the five listed multisets is infeasible");
    assert!(!class.is_empty());
    let min = min_s2_signless(&class);
    assert!(
        (min - 8.31903).abs() <= PUBLISHED_VALUE_TOL,
        "class minimum {min} differs from 8.31903 by more than {PUBLISHED_VALUE_TOL}"
    );
    assert!(start.elapsed() < CLASS_MINIMUM_BUDGET, "took {:?}", start.elapsed());
}

#[test]
fn criterion_03_single_cubic_class_minimum() {
    let start = Instant::now();
    let trees = generate_trees(12).expect("12 is under the size guard");
    let class = filter_degree_sequence(&trees, T55_CLASS_C);
    assert!(!class.is_empty());
    let min = min_s2_signless(&class);
    assert!(
        (min - 8.02294).abs() <= PUBLISHED_VALUE_TOL,
        "class minimum {min} differs from 8.02294 by more than {PUBLISHED_VALUE_TOL}"
    );
    assert!(start.elapsed() < CLASS_MINIMUM_BUDGET, "took {:?}", start.elapsed());
}

#[test]
fn criterion_04_path_uniquely_minimizes_the_two_sum_among_trees() {
    let start = Instant::now();
    let trees = generate_trees(12).expect("12 is under the size guard");
    assert_eq!(trees.len(), 551, "free-tree census on 12 vertices");
    let path_idx = trees
        .iter()
        .position(|t| t.degrees().iter().all(|&d| d <= 2))
        .expect("the path is the unique max-degree-2 tree");
    // Tree generation labels vertices differently from the family builder,
    // so check the path's identity up to relabeling; the census emits one
    // representative per isomorphism class, so index identity then suffices.
    assert_eq!(
        canonical_key(&trees[path_idx]),
        canonical_key(&Family::Path(12).build().unwrap())
    );

    for i in 0..10u32 {
        let a = alpha(0.5 + 0.05 * f64::from(i));
        let path_value = sk_alpha(&trees[path_idx], a, 2).unwrap();
        assert!(
            path_value < 4.0,
            "path two-sum {path_value} is not under 4 at alpha = {}",
            a.value()
        );
        for (idx, t) in trees.iter().enumerate() {
            if idx == path_idx {
                continue;
            }
            let v = sk_alpha(t, a, 2).unwrap();
            assert!(
                v > path_value + MONOTONE_TOL,
                "non-path tree ties or beats the path at alpha = {}: {v} vs {path_value}",
                a.value()
            );
        }
    }
    assert!(start.elapsed() < TREE_CENSUS_BUDGET, "took {:?}", start.elapsed());
}

#[test]
fn criterion_05_path_closed_forms_and_cosine_sums_agree() {
    for n in 1..=30usize {
        let path = Family::Path(n).build().unwrap();
        for k in 1..=n {
            let direct0 = sk_alpha(&path, alpha(0.0), k).unwrap();
            let closed0 = path_sk_closed_form(n, k, alpha(0.0), PathFormPart::I).unwrap();
            assert!(
                (direct0 - closed0).abs() <= CLOSED_FORM_TOL,
                "adjacency-end form: n = {n}, k = {k}: {direct0} vs {closed0}"
            );
            let direct_h = sk_alpha(&path, alpha(0.5), k).unwrap();
            let closed_h = path_sk_closed_form(n, k, alpha(0.5), PathFormPart::II).unwrap();
            assert!(
                (direct_h - closed_h).abs() <= CLOSED_FORM_TOL,
                "midpoint form: n = {n}, k = {k}: {direct_h} vs {closed_h}"
            );
        }
    }
    for n in 1..=200usize {
        for k in 1..=n {
            let closed = cosine_sum(n, k).unwrap();
            let direct: f64 =
                (1..=k).map(|i| (i as f64 * std::f64::consts::PI / n as f64).cos()).sum();
            assert!(
                (closed - direct).abs() <= COSINE_SUM_TOL,
                "cosine partial sum: n = {n}, k = {k}: {closed} vs {direct}"
            );
        }
    }
}

#[test]
fn criterion_06_complete_graph_k_sum_formula() {
    for n in 1..=12usize {
        let g = Family::Complete(n).build().unwrap();
        for &a in &[0.0, 0.25, 0.5, 0.75, 1.0] {
            for k in 1..=n {
                let direct = sk_alpha(&g, alpha(a), k).unwrap();
                let formula = (1.0 - a) * n as f64 + (a * n as f64 - 1.0) * k as f64;
                assert!(
                    (direct - formula).abs() <= CLOSED_FORM_TOL,
                    "n = {n}, alpha = {a}, k = {k}: {direct} vs {formula}"
                );
            }
        }
    }
}

#[test]
fn criterion_07_soundness_sweep_over_small_connected_graphs() {
    let start = Instant::now();
    let grid: Vec<AlphaValue> = (0..11u32).map(|i| alpha(0.1 * f64::from(i))).collect();
    // `sweep_graph` applies the default tolerance, whose parts equal the
    // pinned epsilon; assert the linkage so a default change breaks loudly.
    assert_eq!(Tolerance::default(), Tolerance { abs: SWEEP_EPS, rel: SWEEP_EPS });

    let mut universe = Vec::new();
    for n in 1..=7 {
        universe.extend(connected_graphs(n));
    }
    assert_eq!(universe.len(), 996, "connected-graph census through 7 vertices");

    let mut evaluated = 0usize;
    let mut violating_records = 0usize;
    let mut violating_ids: BTreeSet<String> = BTreeSet::new();
    let mut worst: Option<(String, f64, f64, usize)> = None;
    for g in &universe {
        let outcome = bounds::sweep_graph(g, &grid, false).unwrap();
        evaluated += outcome.evaluated;
        for rec in &outcome.violations {
            violating_records += 1;
            violating_ids.insert(rec.id.to_string());
            let slack = rec.slack.unwrap_or(f64::NAN);
            if worst.as_ref().map_or(true, |(_, s, ..)| slack < *s) {
                worst =
                    Some((rec.id.to_string(), slack, rec.inputs.alpha, rec.inputs.k));
            }
        }
    }
    assert!(start.elapsed() < SWEEP_BUDGET, "took {:?}", start.elapsed());
    assert!(evaluated > 500_000, "the sweep covers the full catalog: {evaluated}");
    assert!(
        violating_records == 0,
        "soundness sweep found {violating_records} violating records from catalog entries \
         {violating_ids:?} (worst: {:?}); every other entry held to {SWEEP_EPS}",
        worst
    );
}

#[test]
fn criterion_08_equality_witnesses_on_regular_and_complete_graphs() {
    let regulars =
        [Family::Cycle(5).build().unwrap(), Family::Complete(4).build().unwrap(), Graph::petersen()];
    for g in &regulars {
        let n = g.vertex_count();
        for &a in &[0.0, 0.25, 0.5, 0.75, 1.0] {
            for k in 1..=n {
                if a <= 0.5 {
                    let r =
                        bounds::evaluate_bound(CatalogId::L51i, g, alpha(a), k, None).unwrap();
                    assert!(r.applicable);
                    let slack = r.slack.unwrap();
                    assert!(
                        slack.abs() <= WITNESS_TOL,
                        "low-regime regular witness at alpha = {a}, k = {k}: slack {slack}"
                    );
                }
                if a >= 0.5 {
                    let r =
                        bounds::evaluate_bound(CatalogId::L51ii, g, alpha(a), k, None).unwrap();
                    assert!(r.applicable);
                    let slack = r.slack.unwrap();
                    assert!(
                        slack.abs() <= WITNESS_TOL,
                        "high-regime regular witness at alpha = {a}, k = {k}: slack {slack}"
                    );
                }
            }
        }
    }
    for n in 3..=10usize {
        let g = Family::Complete(n).build().unwrap();
        for &a in &[0.6, 0.75, 0.9] {
            for k in 1..n {
                let r = bounds::evaluate_bound(CatalogId::U33, &g, alpha(a), k, None).unwrap();
                assert!(r.applicable);
                let slack = r.slack.unwrap();
                assert!(
                    slack.abs() <= WITNESS_TOL,
                    "determinant witness on the complete graph: n = {n}, alpha = {a}, k = {k}: \
                     slack {slack}"
                );
            }
        }
    }
}

#[test]
fn criterion_09_structural_identity_suite() {
    // Line-graph shift: the signless form and the line graph's adjacency
    // share nonzero spectrum after a shift by 2; padding with zeros aligns
    // the dimensions.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0901);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let m = g.edge_count();
        if m == 0 {
            continue;
        }
        checked += 1;
        let q: Vec<f64> =
            build_matrix(&g, MatrixKind::SignlessLaplacian).eigenvalues().unwrap().values().to_vec();
        let lg = g.line_graph().unwrap();
        let shifted: Vec<f64> = build_matrix(&lg, MatrixKind::Adjacency)
            .eigenvalues()
            .unwrap()
            .values()
            .iter()
            .map(|v| v + 2.0)
            .collect();
        let target = n.max(m);
        let mut left = q;
        left.resize(target, 0.0);
        left.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let mut right = shifted;
        right.resize(target, 0.0);
        right.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (l, r) in left.iter().zip(&right) {
            assert!(
                (l - r).abs() <= WITNESS_TOL,
                "line-graph shift mismatch on {} (n = {n}, m = {m}): {l} vs {r}",
                graph6::encode(&g).unwrap()
            );
        }
    }

    // Squared-graph identity, exact in integer arithmetic on graphs with no
    // 3-cycle and no induced 4-cycle.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0902);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(4..=11);
        let g = random_graph(&mut rng, n, 1.5 / n as f64);
        if !is_k3_free_and_c4_free(&g) {
            continue;
        }
        checked += 1;
        let squared = g.graph_power(2).unwrap();
        let a = |i: usize, j: usize| i64::from(g.has_edge(i, j));
        for i in 0..n {
            for j in 0..n {
                let a2: i64 = (0..n).map(|l| a(i, l) * a(l, j)).sum();
                let lap = if i == j { g.degree(i) as i64 } else { -a(i, j) };
                let lhs = i64::from(i != j && squared.has_edge(i, j));
                assert_eq!(
                    lhs,
                    a2 - lap,
                    "squared-graph identity at ({i}, {j}) on {}",
                    graph6::encode(&g).unwrap()
                );
            }
        }
    }

    // Complement identity: the pencil of G and of its complement sum to the
    // pencil of the complete graph. Dyadic parameters keep every entry an
    // exact multiple of a power of two, so equality is bitwise.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0903);
    for _ in 0..50 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let complete = Family::Complete(n).build().unwrap();
        for &a in &[0.0, 0.25, 0.5, 0.75, 1.0] {
            let own = build_matrix(&g, MatrixKind::AAlpha(alpha(a)));
            let co = build_matrix(&g.complement(), MatrixKind::AAlpha(alpha(a)));
            let full = build_matrix(&complete, MatrixKind::AAlpha(alpha(a)));
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        own.get(i, j) + co.get(i, j),
                        full.get(i, j),
                        "complement identity at ({i}, {j}), alpha = {a}"
                    );
                }
            }
        }
    }
}

#[test]
fn criterion_10_k_sums_never_decrease_in_alpha() {
    let grid: Vec<AlphaValue> = (0..11u32).map(|i| alpha(0.1 * f64::from(i))).collect();
    for n in 1..=7usize {
        for g in connected_graphs(n) {
            let spectra_by_alpha: Vec<Vec<f64>> = grid
                .iter()
                .map(|&a| alpha_spectrum(&g, a).unwrap().values().to_vec())
                .collect();
            for k in 1..=n {
                let mut prev = f64::NEG_INFINITY;
                for (ai, values) in spectra_by_alpha.iter().enumerate() {
                    let s: f64 = values[..k].iter().sum();
                    assert!(
                        s >= prev - MONOTONE_TOL,
                        "k-sum decreased on {} at alpha step {ai}, k = {k}: {s} < {prev}",
                        graph6::encode(&g).unwrap()
                    );
                    prev = s;
                }
            }
        }
    }
}

#[test]
fn criterion_11_exact_invariant_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_1101);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(
            matching_number(&g),
            matching_number_bruteforce(&g),
            "matching number disagrees with brute force on {}",
            graph6::encode(&g).unwrap()
        );
    }

    for n in 1..=10usize {
        for t in generate_trees(n).unwrap() {
            assert_eq!(
                nullity(&t),
                n - 2 * matching_number(&t),
                "tree nullity identity fails on {}",
                graph6::encode(&t).unwrap()
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_1102);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=20);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let text = graph6::encode(&g).unwrap();
        let back = graph6::decode(&text).unwrap();
        assert_eq!(back.vertex_count(), g.vertex_count(), "round trip changed n on {text}");
        assert_eq!(back.edges(), g.edges(), "round trip changed edges on {text}");
    }
}

#[test]
fn criterion_12_conjecture_harness_is_deterministic_and_reverifiable() {
    let universe = connected_graphs(8);
    assert_eq!(universe.len(), 11_117, "connected-graph census on 8 vertices");
    let grid: Vec<AlphaValue> = (0..5u32).map(|i| alpha(0.5 + 0.1 * f64::from(i))).collect();

    let first = check_conjecture_1_3("connected-graphs", &universe, &grid, &[]).unwrap();
    let second = check_conjecture_1_3("connected-graphs", &universe, &grid, &[]).unwrap();

    assert_eq!(first.task, "check:c13");
    assert_eq!(first.count, 11_117);
    assert!(first.min_slack.is_some(), "report carries min-slack statistics");
    assert!(!first.extremal.is_empty(), "report names a minimum-slack witness");
    assert_eq!(
        first.json_without_runtime(),
        second.json_without_runtime(),
        "identical configuration must reproduce the identical report"
    );

    // Every reported violation must be independently reconstructible from
    // its own fields: decode the graph, recompute both sides, confirm.
    for v in &first.violations {
        let g = graph6::decode(&v.graph6).unwrap();
        let lhs = sk_alpha(&g, alpha(v.alpha), v.k).unwrap();
        let rhs =
            v.alpha * g.edge_count() as f64 + v.alpha * (v.k * (v.k + 1)) as f64 / 2.0;
        assert!((lhs - v.lhs).abs() <= SWEEP_EPS, "recorded lhs does not reproduce");
        assert!((rhs - v.rhs).abs() <= SWEEP_EPS, "recorded rhs does not reproduce");
        assert!(lhs > rhs, "a recorded violation must actually violate");
    }

    // The harness reports health regardless of the conjecture's truth; slack
    // statistics must be finite either way.
    let slack = first.min_slack.unwrap();
    assert!(slack.is_finite());
}
