use proptest::prelude::*;

use shellcount::commands::{cmd_bounds, cmd_count, cmd_gen, cmd_tree_roots, CountOptions, GenKind};
use shellcount::graph::{parse_edge_list, random_tree, Graph};
use shellcount::report::Report;

/// A graph on up to 6 vertices from an edge-inclusion mask over all pairs.
fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p).collect();
    Graph::from_edges(n, edges).unwrap()
}

proptest! {
    #[test]
    fn count_brute_agrees(n in 2usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask & 0x7fff);
        prop_assume!(g.edge_count() <= 12);
        let a = cmd_count(&g, CountOptions::default()).unwrap();
        let b = cmd_count(&g, CountOptions { brute: true, ..Default::default() }).unwrap();
        prop_assert_eq!(&a.results["count"], &b.results["count"]);
        prop_assert!(a.passed() && b.passed());
        if a.results.len() > 2 {
            prop_assert!(!a.cross_checks.is_empty());
        }
    }

    #[test]
    fn reports_round_trip(n in 1usize..=12, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        let mut reports = vec![
            cmd_count(&g, CountOptions::default()).unwrap(),
            cmd_tree_roots(&g).unwrap(),
        ];
        // Bounds are stated for trees with at least one edge.
        if n >= 2 {
            reports.push(cmd_bounds(&g).unwrap());
        }
        for r in reports {
            prop_assert!(r.passed());
            prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        }
    }

    #[test]
    fn gen_tree_parses_back(n in 1u64..=30, seed in any::<u64>()) {
        let text = cmd_gen(GenKind::Tree, &[n], seed).unwrap();
        let g = parse_edge_list(&text).unwrap();
        prop_assert_eq!(g.n() as u64, n);
        prop_assert!(g.is_tree());
        prop_assert_eq!(text, g.to_edge_list());
    }
}

#[test]
fn big_integers_are_strings() {
    let g = parse_edge_list(&cmd_gen(GenKind::Kmn, &[6, 6], 0).unwrap()).unwrap();
    let r = cmd_count(&g, CountOptions { crosscheck: false, ..Default::default() }).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let count = v["results"]["count"].as_str().unwrap();
    assert!(count.len() > 30);
    assert!(count.bytes().all(|b| b.is_ascii_digit()));
}
