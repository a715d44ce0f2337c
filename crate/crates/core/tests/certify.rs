mod common;

use std::collections::BTreeMap;

use hypo_core::certify::{
    find_good_cut_exhaustive, find_good_cut_proof_guided, is_good_cut, CaseLabel, CutStrategy,
};
use hypo_core::cuts::{strip_pendants, two_core};
use hypo_core::{
    certify, connected_graphs, edge_connectivity, energy, enumerate_two_sided_cuts, is_exceptional,
    to_graph6, verify_certificate, Certificate, EnumSpec, Graph, GraphClass,
};

fn cyclic_up_to(n: usize) -> Vec<Graph> {
    connected_graphs(EnumSpec::new(n).with_class(GraphClass::Cyclic)).unwrap().collect()
}

fn cyclomatic(g: &Graph) -> usize {
    g.size() + 1 - g.order()
}

fn check_descent(node: &Certificate) {
    if let Certificate::Cut { graph, cut, children, .. } = node {
        assert!(cut.len() <= 4);
        for child in children.iter() {
            assert!(cyclomatic(child.graph()) < cyclomatic(graph));
            assert!(is_exceptional(child.graph()).is_none());
            check_descent(child);
        }
        assert_eq!(children[0].graph().order() + children[1].graph().order(), graph.order());
    }
}

#[test]
fn every_cyclic_graph_up_to_ten_is_certified_and_sound() {
    let mut labels: BTreeMap<&str, usize> = BTreeMap::new();
    let mut certified = 0;
    for g in cyclic_up_to(10) {
        if is_exceptional(&g).is_some() {
            continue;
        }
        let cert = certify(&g).unwrap_or_else(|e| panic!("{}: {e}", to_graph6(&g)));
        let report = verify_certificate(&cert).unwrap_or_else(|e| panic!("{}: {e}", to_graph6(&g)));
        check_descent(&cert);
        assert!(report.max_cut_size <= 4);
        // soundness, by direct computation
        assert!(energy(&g).unwrap() >= g.order() as f64 - 1e-9);
        assert!((report.root_energy - energy(&g).unwrap()).abs() < 1e-12);
        for node in cert.nodes() {
            if let Certificate::Cut { report: Some(r), .. } = node {
                *labels.entry(r.case.as_str()).or_default() += 1;
                if let Some(k) = r.case.connectivity() {
                    assert_eq!(r.core_connectivity, Some(k));
                }
            }
        }
        certified += 1;
    }
    // 2571 connected graphs, 83 trees, and K2,3
    assert_eq!(certified, 2487);
    assert!(labels.contains_key("Case 1"));
    assert!(labels.contains_key("Subcase 3.2"));
}

#[test]
fn proof_guided_agrees_with_the_exhaustive_oracle_on_existence() {
    for g in cyclic_up_to(9).into_iter().filter(|g| cyclomatic(g) >= 3) {
        let guided = find_good_cut_proof_guided(&g).unwrap();
        let exhaustive = find_good_cut_exhaustive(&g, 4).unwrap();
        assert_eq!(guided.is_some(), exhaustive.is_some(), "{}", to_graph6(&g));
        if let Some((cut, report)) = guided {
            assert!(is_good_cut(&g, cut.edges()).unwrap());
            assert_eq!(report.cut_size, cut.len());
            if report.strategy == CutStrategy::Exhaustive {
                assert_eq!(report.case, CaseLabel::Fallback);
            }
        }
        if let Some((cut, _)) = exhaustive {
            // the exhaustive search returns a smallest good cut
            let smaller = enumerate_two_sided_cuts(&g, cut.len() - 1)
                .any(|c| is_good_cut(&g, c.edges()).unwrap());
            assert!(!smaller);
        }
    }
}

#[test]
fn prism_min_cut_is_taken_directly() {
    let prism = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .unwrap();
    let (cut, report) = find_good_cut_proof_guided(&prism).unwrap().unwrap();
    assert_eq!(cut.edges(), &[(0, 3), (1, 4), (2, 5)]);
    assert_eq!(report.case, CaseLabel::Subcase3_1);
    assert!(!report.repaired);
    let [a, b] = cut.component_graphs(&prism);
    assert_eq!((a, b), (Graph::complete(3), Graph::complete(3)));
}

#[test]
fn k33_has_a_small_good_cut() {
    let k33 = Graph::complete_bipartite(3, 3);
    let (cut, _) = find_good_cut_exhaustive(&k33, 4).unwrap().unwrap();
    assert!(cut.len() <= 4);
    verify_certificate(&certify(&k33).unwrap()).unwrap();
}

#[test]
fn bridge_to_k23_splits_off_a_quadrangle() {
    // K2,3 with parts {0,1,2} and {3,4}; the bridge 0-5 leads to a K4 on 5..9
    let mut edges = vec![(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (0, 5)];
    for u in 5..9 {
        for v in u + 1..9 {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edge_list(9, &edges).unwrap();
    assert!(!is_good_cut(&g, &[(0, 5)]).unwrap());
    let (cut, report) = find_good_cut_exhaustive(&g, 4).unwrap().unwrap();
    assert!(is_good_cut(&g, cut.edges()).unwrap());
    let (cut, report2) = find_good_cut_proof_guided(&g).unwrap().unwrap();
    assert_eq!(report.strategy, CutStrategy::Exhaustive);
    assert_eq!(cut.edges(), &[(0, 3), (0, 4)]);
    assert_eq!(report2.case, CaseLabel::Case1);
    let [_, quad] = cut.component_graphs(&g);
    assert_eq!(quad, Graph::cycle(4).relabeled(&[0, 2, 1, 3]));
}

fn cubic_up_to_ten() -> Vec<Graph> {
    connected_graphs(EnumSpec::new(10))
        .unwrap()
        .filter(|g| g.order() >= 4 && (0..g.order()).all(|v| g.degree(v) == 3))
        .collect()
}

#[test]
fn tree_side_of_a_cubic_three_cut_is_a_single_vertex() {
    let cubic = cubic_up_to_ten();
    // K4; prism and K3,3; 5 on eight vertices; 19 on ten
    assert_eq!(cubic.len(), 1 + 2 + 5 + 19);
    for g in &cubic {
        for cut in enumerate_two_sided_cuts(g, 3).filter(|c| c.len() == 3) {
            for side in cut.component_graphs(g) {
                if side.is_tree() {
                    assert_eq!(side.order(), 1, "{}", to_graph6(g));
                }
            }
        }
    }
}

#[test]
fn three_connected_cores_without_pendants_are_cubic() {
    for g in connected_graphs(EnumSpec::new(10)).unwrap().filter(|g| !g.is_tree() && g.order() >= 2) {
        let core = strip_pendants(&g);
        if core.order() < 2 || edge_connectivity(&core).unwrap() != 3 || core != g {
            continue;
        }
        assert!((0..g.order()).all(|v| g.degree(v) == 3), "{}", to_graph6(&g));
        assert_eq!(two_core(&g).vertices, (0..g.order()).collect::<Vec<_>>());
    }
}
