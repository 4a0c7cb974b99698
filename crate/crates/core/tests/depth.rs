use coverdepth::takayama::{degree_complex_balanced, degree_complex_generic};
use coverdepth::{
    depth_via_koszul, DegreeVector, FieldSpec, Hypergraph, MonomialIdeal, TakayamaEngine, VertexSet,
};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rational;

fn balanced_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            prop::collection::btree_set(1u64..(1u64 << n), 1..=max_m).prop_map(move |masks| {
                Hypergraph::from_sets(n, masks.into_iter().map(VertexSet::from_bits).collect())
                    .unwrap()
            })
        })
        .prop_filter("balanced", |h| h.is_balanced().unwrap().is_balanced())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fast_path_matches_materialized_power(h in balanced_hypergraph(4, 4), t in 1u32..=3) {
        let engine = TakayamaEngine::new(Q);
        let fast = engine.depth_power_balanced(&h, t).unwrap();
        let power = MonomialIdeal::cover_ideal(&h).power(t).unwrap();
        prop_assert_eq!(fast, engine.depth_via_takayama(&power).unwrap());
        prop_assert_eq!(fast, depth_via_koszul(&power, Q).unwrap());
    }

    #[test]
    fn edge_formula_matches_definition(
        h in balanced_hypergraph(4, 4),
        s in 1u32..=3,
        raw in prop::collection::vec(0i64..=7, 4),
    ) {
        let alpha = DegreeVector::new(raw[..h.n()].to_vec());
        let symbolic = MonomialIdeal::symbolic_power(&h, s).unwrap();
        prop_assert_eq!(
            degree_complex_balanced(&h, &alpha, s).unwrap(),
            degree_complex_generic(&symbolic, &alpha).unwrap()
        );
    }

    #[test]
    fn clamping_entries_to_s_keeps_the_complex(
        h in balanced_hypergraph(5, 5),
        s in 1u32..=3,
        raw in prop::collection::vec(0i64..=9, 5),
    ) {
        let alpha: Vec<i64> = raw[..h.n()].to_vec();
        let clamped: Vec<i64> = alpha.iter().map(|&a| a.min(i64::from(s))).collect();
        prop_assert_eq!(
            degree_complex_balanced(&h, &DegreeVector::new(alpha), s).unwrap(),
            degree_complex_balanced(&h, &DegreeVector::new(clamped), s).unwrap()
        );
    }
}

#[test]
fn characteristic_two_agrees_on_small_paths() {
    for n in 2..=5 {
        let h = Hypergraph::path(n);
        for t in 1..=3 {
            let q = TakayamaEngine::new(Q).depth_power_balanced(&h, t).unwrap();
            let p = TakayamaEngine::new(FieldSpec::Prime(2))
                .depth_power_balanced(&h, t)
                .unwrap();
            assert_eq!(q, p, "P{n} t={t}");
        }
    }
}
