mod common;

use matroidal::corpus;
use matroidal::invariants::{GraphInvariants, MatroidInvariants};
use matroidal::matroid::{ElementSet, Matroid, MultiGraph, VectorConfig};
use matroidal::poly::UnivarPoly;
use matroidal::spec::MatroidSpec;
use matroidal::tutte::{tutte_activities, tutte_del_con, tutte_subset_sum};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::poly;

fn small_graph() -> impl Strategy<Value = MultiGraph> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=8)
            .prop_map(move |edges| MultiGraph::new(n, edges).unwrap())
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, prop_oneof![Just(1i64), Just(2), Just(3)])
        .prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn config(max_n: usize, max_r: usize) -> impl Strategy<Value = VectorConfig> {
    (1..=max_r, 0..=max_n).prop_flat_map(|(r, extra)| {
        proptest::collection::vec(proptest::collection::vec(rational(), r), r.max(extra))
            .prop_map(move |rows| VectorConfig::new(r, rows).unwrap())
    })
}

fn spanning(max_n: usize, max_r: usize) -> impl Strategy<Value = VectorConfig> {
    config(max_n, max_r).prop_filter("spanning", VectorConfig::full_rank)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tutte_duality(x in config(9, 4)) {
        let m = Matroid::from_vectors(x).unwrap();
        let t = tutte_subset_sum(&m).unwrap().polynomial;
        prop_assert_eq!(t.swap_vars(), tutte_subset_sum(&m.dual()).unwrap().polynomial);
    }

    #[test]
    fn algorithms_agree_on_graphs(g in small_graph()) {
        let m = Matroid::graphic(g).unwrap();
        let t = tutte_subset_sum(&m).unwrap().polynomial;
        prop_assert_eq!(&t, &tutte_del_con(&m).unwrap().polynomial);
        prop_assert_eq!(&t, &tutte_activities(&m).unwrap().polynomial);
    }

    #[test]
    fn activities_ignore_ground_order(x in config(8, 3), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let m = Matroid::from_vectors(x).unwrap();
        let mut perm: Vec<usize> = (0..m.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = m.relabel(&perm).unwrap();
        prop_assert_eq!(tutte_activities(&m).unwrap().polynomial, tutte_activities(&shuffled).unwrap().polynomial);
    }

    #[test]
    fn characteristic_by_subsets(x in config(12, 4)) {
        let m = Matroid::from_vectors(x).unwrap();
        let chi = MatroidInvariants::new(&m).unwrap().characteristic();
        prop_assert_eq!(chi, poly(&common::characteristic_by_subsets(&m)));
    }

    #[test]
    fn f_vector_basics(x in config(10, 4)) {
        let m = Matroid::from_vectors(x).unwrap();
        let f = MatroidInvariants::new(&m).unwrap().f_vector();
        let counted: Vec<BigInt> = common::f_vector(&m).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(&f, &counted);
        prop_assert_eq!(&f[0], &BigInt::from(1));
        if f.len() > 1 {
            prop_assert_eq!(&f[1], &BigInt::from(m.non_loops()));
        }
    }

    #[test]
    fn realized_extension_is_free(x in spanning(8, 4)) {
        let m = Matroid::from_vectors(x.clone()).unwrap();
        let realized = Matroid::from_vectors(x.realize_free_extension().unwrap()).unwrap();
        prop_assert!(realized.same_oracle(&m.free_extension().unwrap()));
    }

    #[test]
    fn realized_dual_is_dual(x in spanning(8, 4)) {
        let m = Matroid::from_vectors(x.clone()).unwrap();
        let realized = Matroid::from_vectors(x.dual_realization().unwrap()).unwrap();
        prop_assert!(realized.same_oracle(&m.dual()));
        prop_assert!(m.dual().dual().same_oracle(&m));
    }

    #[test]
    fn coextension_raises_rank(x in config(7, 3)) {
        let m = Matroid::from_vectors(x).unwrap();
        let c = m.free_coextension().unwrap();
        prop_assert_eq!(c.rank(), m.rank() + 1);
        prop_assert!(c.same_oracle(&m.dual().free_extension().unwrap().dual()));
    }

    #[test]
    fn submodularity(x in config(8, 4), a in any::<u64>(), b in any::<u64>()) {
        let m = Matroid::from_vectors(x).unwrap();
        let full = m.ground().0;
        let (a, b) = (ElementSet(a & full), ElementSet(b & full));
        prop_assert!(m.rank_unchecked(a) + m.rank_unchecked(b) >= m.rank_unchecked(a.union(b)) + m.rank_unchecked(a.intersection(b)));
    }
}

#[test]
fn chromatic_counts_colorings() {
    for g in corpus::builtin_graphs() {
        let chi = GraphInvariants::new(&g).unwrap().chromatic().poly;
        for q in 1..=3u64 {
            assert_eq!(
                chi.eval(&BigInt::from(q)),
                BigInt::from(common::count_colorings(&g, q)),
                "{:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn flow_counts_nowhere_zero_flows() {
    for g in corpus::builtin_graphs()
        .into_iter()
        .filter(|g| g.num_edges() <= 8)
    {
        let phi = GraphInvariants::new(&g).unwrap().flow().poly;
        for q in 2..=5u64 {
            assert_eq!(
                phi.eval(&BigInt::from(q)),
                BigInt::from(common::count_flows(&g, q)),
                "{:?} q={q}",
                g.edges()
            );
        }
    }
}

#[test]
fn reliability_matches_connected_subgraph_sum() {
    let mut checked = 0;
    for g in corpus::builtin_graphs()
        .into_iter()
        .filter(|g| g.is_connected() && g.num_edges() <= 6)
    {
        let inv = GraphInvariants::new(&g).unwrap();
        let r = inv.reliability().unwrap().poly;
        assert_eq!(r, poly(&common::reliability(&g)), "{:?}", g.edges());
        assert_eq!(r.eval(&BigInt::from(0)), BigInt::from(1));
        let critical = inv.critical_config().unwrap().poly;
        assert_eq!(
            critical.coeff_sum(),
            BigInt::from(common::spanning_trees(&g))
        );
        checked += 1;
    }
    assert!(checked > 30);
}

#[test]
fn disconnected_graphs_are_rejected() {
    let g = MultiGraph::new(3, vec![(0, 1)]).unwrap();
    let inv = GraphInvariants::new(&g).unwrap();
    assert!(inv.reliability().is_err());
    assert!(inv.critical_config().is_err());
}

#[test]
fn bridge_kills_flows_and_loop_kills_colorings() {
    let bridge = GraphInvariants::new(&MultiGraph::path(2)).unwrap();
    assert!(bridge.flow().poly.is_zero());
    let looped = GraphInvariants::new(&MultiGraph::new(1, vec![(0, 0)]).unwrap()).unwrap();
    assert!(looped.chromatic().poly.is_zero());
    assert_eq!(looped.flow().poly, poly(&[-1, 1]));
    let edgeless = GraphInvariants::new(&MultiGraph::new(4, vec![]).unwrap()).unwrap();
    assert_eq!(
        edgeless.chromatic().poly,
        UnivarPoly::monomial(BigInt::from(1), 4)
    );
}

#[test]
fn corpus_specs_round_trip() {
    for e in corpus::builtin() {
        let spec = MatroidSpec::describe(&e.matroid);
        let back = MatroidSpec::from_json(&spec.to_json())
            .unwrap()
            .build()
            .unwrap();
        assert!(back.same_oracle(&e.matroid), "{}", e.name);
    }
}
