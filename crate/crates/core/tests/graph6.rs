use hypo_core::graph6::parse_graph6_bounded;
use hypo_core::{parse_graph6, to_graph6, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.15), len).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edge_list_bounded(n, &edges, 64).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph(64)) {
        let text = to_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6_bounded(&text, 64).unwrap(), g);
    }

    #[test]
    fn garbage_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse_graph6(&text);
    }
}

#[test]
fn long_header_orders() {
    let g = Graph::from_edge_list_bounded(63, &[(0, 62)], 64).unwrap();
    let text = to_graph6(&g);
    assert!(text.starts_with('~'));
    assert_eq!(parse_graph6_bounded(&text, 64).unwrap(), g);
    assert!(parse_graph6(&text).is_err(), "default bound is 32");
}
