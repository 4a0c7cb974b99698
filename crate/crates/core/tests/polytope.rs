use coverdepth::polytope::{feasible_splits, integer_point, integrality_all_splits};
use coverdepth::{ClosureMode, EdgeSplitSystem, Hypergraph, VertexSet};
use proptest::prelude::*;

fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set(1u64..(1u64 << n), 1..=max_m).prop_map(move |masks| {
            Hypergraph::from_sets(n, masks.into_iter().map(VertexSet::from_bits).collect()).unwrap()
        })
    })
}

/// Every split realized by some `α ∈ {0..t}^n`, by brute force.
fn splits_by_enumeration(h: &Hypergraph, t: u32) -> std::collections::BTreeSet<VertexSet> {
    let n = h.n();
    let mut out = std::collections::BTreeSet::new();
    let mut alpha = vec![0u32; n];
    loop {
        let upper: VertexSet = h
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.iter().map(|v| alpha[v - 1]).sum::<u32>() < t)
            .map(|(k, _)| k + 1)
            .collect();
        out.insert(upper);
        let mut k = 0;
        while k < n && alpha[k] == t {
            alpha[k] = 0;
            k += 1;
        }
        if k == n {
            return out;
        }
        alpha[k] += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_enumeration_and_search(h in hypergraph(5, 5), t in 1u32..=3) {
        let dp = feasible_splits(&h, t);
        prop_assert_eq!(&dp, &splits_by_enumeration(&h, t));
        for upper in h.all_edges().subsets() {
            let s = EdgeSplitSystem::new(h.clone(), upper, t, ClosureMode::Omega).unwrap();
            let point = integer_point(&s).unwrap();
            prop_assert_eq!(point.is_some(), dp.contains(&upper));
            if let Some(x) = point {
                prop_assert!(s.contains_lattice_point(&x));
            }
        }
    }

    #[test]
    fn balanced_systems_have_binary_vertices(h in hypergraph(5, 5)) {
        if h.is_balanced().unwrap().is_balanced() {
            for (upper, verdict) in integrality_all_splits(&h).unwrap() {
                prop_assert!(verdict.is_integral(), "split {:?}", upper);
            }
        }
    }
}
