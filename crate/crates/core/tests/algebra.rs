use coverdepth::{Hypergraph, MonomialIdeal, SimplicialComplex, VertexSet};
use proptest::prelude::*;

fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set(1u64..(1u64 << n), 1..=max_m).prop_map(move |masks| {
            Hypergraph::from_sets(n, masks.into_iter().map(VertexSet::from_bits).collect()).unwrap()
        })
    })
}

fn ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=4)
        .prop_map(move |rows| MonomialIdeal::from_exponent_lists(Some(n), rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn powers_add(i in ideal(3), a in 1u32..=2, b in 1u32..=2) {
        let lhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert!(lhs.equals(&i.power(a + b).unwrap()).unwrap());
    }

    #[test]
    fn cover_ideal_constructions_agree(h in hypergraph(5, 5)) {
        let a = MonomialIdeal::cover_ideal(&h);
        let b = MonomialIdeal::cover_ideal_by_intersection(&h);
        prop_assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn ordinary_inside_symbolic(h in hypergraph(4, 4), s in 1u32..=3) {
        let j = MonomialIdeal::cover_ideal(&h);
        let ordinary = j.power(s).unwrap();
        let symbolic = MonomialIdeal::symbolic_power(&h, s).unwrap();
        prop_assert!(ordinary.is_subset_of(&symbolic).unwrap());
        if s == 1 {
            prop_assert!(ordinary.equals(&symbolic).unwrap());
        }
    }

    #[test]
    fn localized_membership_grows_with_f(
        i in ideal(3),
        alpha in prop::collection::vec(-1i64..=3, 3),
        extra in 0u64..8,
    ) {
        let negative: VertexSet = alpha
            .iter()
            .enumerate()
            .filter(|(_, &a)| a < 0)
            .map(|(k, _)| k + 1)
            .collect();
        let f = negative;
        let g = f.union(VertexSet::from_bits(extra));
        if i.contains(&alpha, f).unwrap() {
            prop_assert!(i.contains(&alpha, g).unwrap());
        }
    }

    #[test]
    fn stanley_reisner_roundtrip(h in hypergraph(5, 4)) {
        // Squarefree monomial ideal from the edges.
        let i = MonomialIdeal::from_exponent_lists(
            Some(h.n()),
            h.edges()
                .iter()
                .map(|e| (1..=h.n()).map(|v| u32::from(e.contains(v))).collect())
                .collect(),
        )
        .unwrap();
        let complex = SimplicialComplex::stanley_reisner_complex(&i);
        prop_assert!(complex.stanley_reisner_ideal().equals(&i).unwrap());
    }

    #[test]
    fn radical_of_power(h in hypergraph(4, 4), t in 1u32..=3) {
        let j = MonomialIdeal::cover_ideal(&h);
        prop_assert!(j.power(t).unwrap().radical().equals(&j).unwrap());
    }
}
