//! Randomized structural properties: constructions and spectral quantities
//! that must hold for every graph, exercised over random adjacency patterns.

use alpha_spectra::canon::canonical_key;
use alpha_spectra::graph::Graph;
use alpha_spectra::graph6;
use alpha_spectra::invariants::{
    find_clique_packing, find_even_cycle_packing, first_zagreb, validate_clique_packing,
    validate_cycle_packing,
};
use alpha_spectra::linalg::SymMatrix;
use alpha_spectra::spectra::{self, AlphaValue, MatrixKind};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("generated edges are in range")
        })
    })
}

fn arb_alpha() -> impl Strategy<Value = AlphaValue> {
    (0u32..=20).prop_map(|i| AlphaValue::new(f64::from(i) * 0.05).expect("grid point in [0,1]"))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 96,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn complement_is_an_involution(g in arb_graph(9)) {
        let back = g.complement().complement();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn complement_edge_counts_partition_the_complete_graph(g in arb_graph(9)) {
        let n = g.vertex_count();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn graph6_round_trip_preserves_the_graph(g in arb_graph(9)) {
        let text = graph6::encode(&g).expect("encodable size");
        let back = graph6::decode(&text).expect("own encoding decodes");
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
        if g.vertex_count() <= 8 {
            prop_assert_eq!(canonical_key(&back), canonical_key(&g));
        }
    }

    #[test]
    fn line_graph_degree_identity(g in arb_graph(8)) {
        prop_assume!(g.edge_count() > 0);
        let lg = g.line_graph().expect("nonempty edge set");
        prop_assert_eq!(lg.vertex_count(), g.edge_count());
        // Each edge uv turns into a vertex of degree d(u) + d(v) - 2.
        for (w, (u, v)) in g.edges().into_iter().enumerate() {
            prop_assert_eq!(lg.degree(w), g.degree(u) + g.degree(v) - 2);
        }
        let handshake: usize = g.degrees().iter().map(|&d| d * d.saturating_sub(1)).sum();
        prop_assert_eq!(2 * lg.edge_count(), handshake);
    }

    #[test]
    fn double_graph_doubles_degrees(g in arb_graph(8)) {
        let dg = g.double_graph();
        prop_assert_eq!(dg.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(dg.edge_count(), 4 * g.edge_count());
        for v in 0..g.vertex_count() {
            prop_assert_eq!(dg.degree(v), 2 * g.degree(v));
            prop_assert_eq!(dg.degree(v + g.vertex_count()), 2 * g.degree(v));
        }
        prop_assert_eq!(first_zagreb(&dg), 8 * first_zagreb(&g));
    }

    #[test]
    fn first_zagreb_is_squeezed_by_edge_statistics(g in arb_graph(9)) {
        let n = g.vertex_count() as f64;
        let m = g.edge_count() as f64;
        let z1 = first_zagreb(&g) as f64;
        prop_assert!(z1 >= 4.0 * m * m / n - 1e-9);
        prop_assert!(z1 <= 2.0 * m * g.max_degree() as f64 + 1e-9);
    }

    #[test]
    fn deleting_a_vertex_interlaces_the_pencil_spectrum(
        g in arb_graph(8),
        a in arb_alpha(),
    ) {
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let full = spectra::build_matrix(&g, MatrixKind::AAlpha(a));
        let minor = SymMatrix::from_fn(n - 1, |i, j| full.get(i, j));
        let lam = full.eigenvalues().unwrap();
        let mu = minor.eigenvalues().unwrap();
        let (lam, mu) = (lam.values(), mu.values());
        // Descending order: lam[i] >= mu[i] >= lam[i + 1].
        for i in 0..n - 1 {
            prop_assert!(lam[i] >= mu[i] - 1e-9, "upper interlace at {i}");
            prop_assert!(mu[i] >= lam[i + 1] - 1e-9, "lower interlace at {i}");
        }
    }

    #[test]
    fn smallest_pencil_eigenvalue_is_monotone_and_vanishing_at_threshold(g in arb_graph(8)) {
        let lam_min = |a: AlphaValue| {
            spectra::alpha_spectrum(&g, a).unwrap().min()
        };
        let a0 = spectra::alpha0(&g, 1e-10).unwrap();
        prop_assert!((0.0..=1.0).contains(&a0));
        prop_assert!(lam_min(AlphaValue::new(a0).unwrap()) >= -1e-6);
        // lam_min grows with alpha because the pencil adds a PSD term.
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=10 {
            let v = lam_min(AlphaValue::new(f64::from(i) * 0.1).unwrap());
            prop_assert!(v >= prev - 1e-9);
            prev = v;
        }
        if g.edge_count() > 0 {
            // With any edge present the adjacency end has a negative eigenvalue.
            prop_assert!(lam_min(AlphaValue::new(0.0).unwrap()) < 0.0);
        }
    }

    #[test]
    fn k_sums_never_decrease_in_alpha(
        g in arb_graph(8),
        lo in arb_alpha(),
        hi in arb_alpha(),
    ) {
        let (lo, hi) = if lo.value() <= hi.value() { (lo, hi) } else { (hi, lo) };
        for k in 1..=g.vertex_count() {
            let s_lo = spectra::sk_alpha(&g, lo, k).unwrap();
            let s_hi = spectra::sk_alpha(&g, hi, k).unwrap();
            prop_assert!(
                s_hi >= s_lo - 1e-9,
                "k = {k}: {s_hi} at alpha = {} under {s_lo} at alpha = {}",
                hi.value(),
                lo.value()
            );
        }
    }

    #[test]
    fn energy_routes_agree(g in arb_graph(8), a in arb_alpha()) {
        let (via_def, via_sigma, via_positive) = spectra::alpha_energy_routes(&g, a).unwrap();
        prop_assert!((via_def - via_sigma).abs() <= 1e-8);
        prop_assert!((via_def - via_positive).abs() <= 1e-8);
    }

    #[test]
    fn discovered_packings_validate(g in arb_graph(8)) {
        let cliques = find_clique_packing(&g);
        prop_assert!(validate_clique_packing(&g, &cliques).is_ok());
        let cycles = find_even_cycle_packing(&g);
        prop_assert!(validate_cycle_packing(&g, &cycles).is_ok());
    }

    #[test]
    fn spanning_trees_span(g in arb_graph(9)) {
        prop_assume!(g.is_connected() && g.vertex_count() >= 2);
        let t = g.spanning_tree().expect("connected input");
        prop_assert!(t.is_tree());
        prop_assert_eq!(t.vertex_count(), g.vertex_count());
        for (u, v) in t.edges() {
            prop_assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn pencil_of_complement_completes_the_pencil_of_complete(
        g in arb_graph(8),
        a in arb_alpha(),
    ) {
        let n = g.vertex_count();
        let own = spectra::build_matrix(&g, MatrixKind::AAlpha(a));
        let co = spectra::build_matrix(&g.complement(), MatrixKind::AAlpha(a));
        let complete = Graph::from_edges(
            n,
            &(0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect::<Vec<_>>(),
        )
        .unwrap();
        let target = spectra::build_matrix(&complete, MatrixKind::AAlpha(a));
        // With a dyadic parameter every entry is an exact multiple of a power
        // of two, so the identity holds bitwise; otherwise the diagonal can
        // differ by an ulp from regrouping the degree products.
        let dyadic = (a.value() * 4.0).fract() == 0.0;
        for i in 0..n {
            for j in i..n {
                let got = own.get(i, j) + co.get(i, j);
                let want = target.get(i, j);
                if dyadic || i != j {
                    prop_assert_eq!(got, want, "entry ({}, {})", i, j);
                } else {
                    prop_assert!((got - want).abs() <= 1e-12 * n as f64, "entry ({}, {})", i, j);
                }
            }
        }
    }
}
