use std::collections::BTreeSet;

use hypercover::koenig::{bipartite_edge_coloring, complete_bipartite_matchings};
use hypercover::Graph;
use proptest::prelude::*;

fn arb_bipartite() -> impl Strategy<Value = (Graph, usize)> {
    (1usize..20, 1usize..20)
        .prop_flat_map(|(p, q)| {
            let pairs: Vec<(usize, usize)> = (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b))).collect();
            let len = pairs.len();
            (Just(p), Just(p + q), proptest::sample::subsequence(pairs, 0..=len))
        })
        .prop_map(|(p, n, edges)| (Graph::from_edges(n, edges).unwrap(), p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn colouring_uses_max_degree_matchings((g, p) in arb_bipartite()) {
        let col = bipartite_edge_coloring(&g, &(0..p).collect(), &(p..g.n()).collect()).unwrap();
        prop_assert_eq!(col.classes.len(), g.max_degree());
        let mut all = BTreeSet::new();
        for class in &col.classes {
            let mut touched = BTreeSet::new();
            for &(a, b) in class {
                prop_assert!(g.has_edge(a, b));
                prop_assert!(touched.insert(a) && touched.insert(b));
                prop_assert!(all.insert((a, b)));
            }
        }
        prop_assert_eq!(all.len(), g.edge_count());
    }

    #[test]
    fn round_robin_partitions_complete_bipartite(a in 1usize..12, extra in 0usize..6) {
        let b = a + extra;
        let col = complete_bipartite_matchings(a, b).unwrap();
        prop_assert_eq!(col.classes.len(), b);
        let mut all = BTreeSet::new();
        for class in &col.classes {
            prop_assert_eq!(class.len(), a);
            let right: BTreeSet<usize> = class.iter().map(|&(_, r)| r).collect();
            prop_assert_eq!(right.len(), a);
            all.extend(class.iter().copied());
        }
        prop_assert_eq!(all.len(), a * b);
    }
}
