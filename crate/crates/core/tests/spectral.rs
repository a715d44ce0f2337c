mod common;

use hypo_core::spectral::{eigenvalues_symmetric, adjacency_matrix, PrecisionTier};
use hypo_core::{
    char_poly_int, classify, connected_graphs, energy, spectrum, to_graph6, Classification, EnumSpec,
    Graph, IntPoly,
};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn trace_and_square_sums_up_to_ten() {
    for g in connected_graphs(EnumSpec::new(10)).unwrap() {
        let s = spectrum(&g).unwrap();
        let ev = s.eigenvalues();
        assert_eq!(ev.len(), g.order());
        assert!(ev.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = ev.iter().sum();
        let squares: f64 = ev.iter().map(|x| x * x).sum();
        assert!(sum.abs() <= 1e-8, "{}", to_graph6(&g));
        assert!((squares - 2.0 * g.size() as f64).abs() <= 1e-8, "{}", to_graph6(&g));
        let delta = g.max_degree() as f64;
        assert!(ev.iter().all(|x| x.abs() <= delta + 1e-9));
    }
}

#[test]
fn characteristic_polynomial_residuals_up_to_ten() {
    for g in connected_graphs(EnumSpec::new(10)).unwrap() {
        let (n, m) = (g.order(), g.size());
        let p = char_poly_int(&g);
        assert!(p.is_monic());
        assert_eq!(p.degree(), n);
        if n >= 2 {
            assert_eq!(p.coefficient(n - 1).to_i64(), Some(0));
            assert_eq!(p.coefficient(n - 2).to_i64(), Some(-(m as i64)));
        }
        let bound = 1e-6 * n as f64 * (g.max_degree() as f64).powi(n as i32);
        for &x in spectrum(&g).unwrap().eigenvalues() {
            assert!(p.eval_f64(x).abs() <= bound, "{} at {x}", to_graph6(&g));
        }
    }
}

#[test]
fn closed_forms() {
    let k23 = Graph::complete_bipartite(2, 3);
    assert_eq!(char_poly_int(&k23), IntPoly::from_i64(&[0, 0, 0, -6, 0, 1]));
    assert!((energy(&k23).unwrap() - 2.0 * 6f64.sqrt()).abs() < 1e-12);
    let v = classify(&k23).unwrap();
    assert_eq!(v.classification, Classification::Hypoenergetic);
    assert!((v.margin - (2.0 * 6f64.sqrt() - 5.0)).abs() < 1e-12);

    let c6 = eigenvalues_symmetric(6, &adjacency_matrix(&Graph::cycle(6))).unwrap();
    for (got, want) in c6.iter().zip([2.0, 1.0, 1.0, -1.0, -1.0, -2.0]) {
        assert!((got - want).abs() < 1e-12);
    }
    let v = classify(&Graph::cycle(6)).unwrap();
    assert_eq!(v.classification, Classification::NonHypoenergetic);
    assert!((v.margin - 2.0).abs() < 1e-12);

    let v = classify(&Graph::star(4)).unwrap();
    assert!((v.margin - (2.0 * 3f64.sqrt() - 4.0)).abs() < 1e-12);
    assert!(v.is_hypoenergetic());

    assert_eq!(char_poly_int(&Graph::path(3)), IntPoly::from_i64(&[0, -2, 0, 1]));
    assert_eq!(char_poly_int(&Graph::path(2)), IntPoly::from_i64(&[-1, 0, 1]));
    assert!((energy(&Graph::complete(4)).unwrap() - 6.0).abs() < 1e-12);
    assert_eq!(classify(&Graph::empty(1)).unwrap().classification, Classification::Hypoenergetic);
}

#[test]
fn exact_ties_are_settled_by_integer_spectra() {
    // E = n exactly for K2, C4, the (2,2) double star and K3,3
    let double_star = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    for g in [Graph::path(2), Graph::cycle(4), double_star, Graph::complete_bipartite(3, 3)] {
        let v = classify(&g).unwrap();
        assert_eq!(v.tier, PrecisionTier::Exact, "{}", to_graph6(&g));
        assert_eq!(v.margin, 0.0);
        assert_eq!(v.classification, Classification::NonHypoenergetic);
    }
}

#[test]
fn energy_is_additive_over_components() {
    let small: Vec<Graph> = connected_graphs(EnumSpec::new(7)).unwrap().collect();
    for a in &small {
        for b in small.iter().filter(|b| a.order() + b.order() <= 8) {
            let union = a.disjoint_union(b);
            let lhs = energy(&union).unwrap();
            let rhs = energy(a).unwrap() + energy(b).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9, "{} + {}", to_graph6(a), to_graph6(b));
        }
    }
}

#[test]
fn energy_is_relabeling_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.random_range(1..=12);
        let g = common::random_connected(n, rng.random_range(0.05..0.6), &mut rng);
        let base = energy(&g).unwrap();
        for _ in 0..3 {
            let h = common::relabel(&g, &common::random_permutation(n, &mut rng));
            assert!((energy(&h).unwrap() - base).abs() <= 1e-10);
        }
    }
}

#[test]
fn deleting_an_edge_cut_never_raises_energy() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0;
    while checked < 600 {
        let n = rng.random_range(2..=10);
        let g = common::random_connected(n, rng.random_range(0.1..0.7), &mut rng);
        let Some((_, cut)) = common::random_bond(&g, &mut rng) else { continue };
        let before = energy(&g).unwrap();
        let after = energy(&g.without_edges(&cut)).unwrap();
        assert!(after <= before + 1e-8, "{} minus {cut:?}", to_graph6(&g));
        checked += 1;
    }
}

#[test]
fn quadrangle_free_cyclic_graphs_exceed_their_order() {
    let spec = EnumSpec::new(10).with_class(hypo_core::GraphClass::QuadrangleFree);
    let mut seen = 0;
    for g in connected_graphs(spec).unwrap().filter(|g| g.size() >= g.order()) {
        let v = classify(&g).unwrap();
        assert!(v.margin > 0.0, "{}", to_graph6(&g));
        seen += 1;
    }
    assert!(seen > 100);
}
