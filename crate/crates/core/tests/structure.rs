mod common;

use common::{arb_graph, corpus};
use proptest::prelude::*;
use toughham::graph::*;
use toughham::oracle;
use toughham::structure::*;
use toughham::{Rational, Toughness};

fn ceil(t: Toughness) -> Option<i64> {
    t.finite().map(|r| r.ceil().to_integer())
}

#[test]
fn corpus_matches_oracles() {
    for g in corpus() {
        let code = write_graph6(&g);
        if g.n() > 0 {
            let fast = toughness(&g).unwrap();
            let (slow, _) = oracle::toughness(&g);
            assert_eq!(fast.value, slow, "{code}");
            if let (Toughness::Finite(r), Some(s)) = (fast.value, fast.witness) {
                let c = g.components_after_removing(s);
                assert!(c >= 2, "{code}");
                assert_eq!(Rational::new(s.len() as i64, c as i64), r, "{code}");
            }
        }
        let (alpha, set) = independence_number(&g);
        assert_eq!(alpha, oracle::independence_number(&g), "{code}");
        assert!(g.is_independent(set) && set.len() == alpha);

        assert_eq!(vertex_connectivity(&g), oracle::vertex_connectivity(&g), "{code}");
        if let Some(s) = min_separator(&g) {
            assert!(!g.remove_vertices(s).is_connected() || g.n() - s.len() <= 1, "{code}");
        }

        for k in 1..=3 {
            let pattern = p2kp1_pattern(k).unwrap();
            let generic = find_induced(&g, &pattern);
            assert_eq!(is_p2kp1_free(&g, k).unwrap(), generic.is_none(), "{code} k={k}");
            if let Some(map) = &generic {
                assert!(is_induced_embedding(&g, &pattern, map));
            }
            if let Some(w) = p2kp1_witness(&g, k).unwrap() {
                w.validate(&g, k).unwrap();
            }
        }
    }
}

#[test]
fn toughness_bounds_connectivity() {
    // κ >= 2τ holds throughout; the stronger κ >= 2⌈τ⌉ does not (Petersen: κ = 3, τ = 4/3)
    let mut literal_failures = 0;
    for g in corpus().into_iter().filter(|g| g.n() > 0 && !g.is_complete()) {
        let tau = toughness(&g).unwrap().value.finite().unwrap();
        let kappa = vertex_connectivity(&g);
        assert!(Rational::from_integer(kappa as i64) >= tau * 2, "{}", write_graph6(&g));
        assert!(is_k_connected(&g, (tau * 2).ceil().to_integer() as usize));
        if (kappa as i64) < 2 * ceil(Toughness::Finite(tau)).unwrap() {
            literal_failures += 1;
        }
    }
    assert!(literal_failures > 0);
    let p = petersen();
    assert_eq!(vertex_connectivity(&p), 3);
    assert_eq!(ceil(toughness(&p).unwrap().value), Some(2));
}

#[test]
fn named_values() {
    let p = petersen();
    assert_eq!(min_degree(&p).unwrap(), 3);
    assert_eq!(vertex_connectivity(&p), 3);
    assert_eq!(independence_number(&p).0, 4);
    assert_eq!(independence_number(&cycle(7).unwrap()).0, 3);
    assert_eq!(toughness(&p).unwrap().value, Toughness::Finite(Rational::new(4, 3)));
    assert_eq!(toughness(&cycle(8).unwrap()).unwrap().value, Toughness::Finite(Rational::from_integer(1)));
    assert_eq!(toughness(&complete(6).unwrap()).unwrap().value, Toughness::Infinite);
    assert!(is_t_tough(&p, Rational::from_integer(1)).unwrap().is_tough());
    match is_t_tough(&p, Rational::new(3, 2)).unwrap() {
        TToughness::Violated { cutset, components } => assert_eq!((cutset.len(), components), (4, 3)),
        TToughness::Tough => panic!("petersen is not 3/2-tough"),
    }
    assert!(p2kp1_witness(&cycle(9).unwrap(), 2).unwrap().is_some());
    assert!(find_induced(&p, &path(3).unwrap()).is_some());

    for m in 1..8 {
        for n in m + 1..=8 {
            let g = complete_bipartite(m, n).unwrap();
            let tau = toughness(&g).unwrap();
            assert_eq!(vertex_connectivity(&g), m);
            assert_eq!(oracle::vertex_connectivity(&g), m);
            assert_eq!(tau.value, Toughness::Finite(Rational::new(m as i64, n as i64)));
            assert_eq!(tau.witness, Some(VertexSet::full(m)));
            for k in 1..=4 {
                assert!(is_p2kp1_free(&g, k).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn toughness_matches_oracle(g in arb_graph(1, 12)) {
        prop_assert_eq!(toughness(&g).unwrap().value, oracle::toughness(&g).0);
    }

    #[test]
    fn t_tough_is_monotone(g in arb_graph(1, 11), a in 1i64..12, b in 1i64..12, d in 1i64..5) {
        let (t1, t2) = (Rational::new(a.max(b), d), Rational::new(a.min(b), d));
        let tau = toughness(&g).unwrap().value;
        let r1 = is_t_tough(&g, t1).unwrap();
        prop_assert_eq!(r1.is_tough(), tau.at_least(t1));
        if r1.is_tough() {
            prop_assert!(is_t_tough(&g, t2).unwrap().is_tough());
        }
        if let TToughness::Violated { cutset, components } = r1 {
            prop_assert_eq!(g.components_after_removing(cutset), components);
            prop_assert!(Rational::from_integer(cutset.len() as i64) < t1 * components as i64);
        }
    }

    #[test]
    fn connectivity_and_independence(g in arb_graph(1, 14)) {
        prop_assert_eq!(vertex_connectivity(&g), oracle::vertex_connectivity(&g));
        prop_assert_eq!(independence_number(&g).0, oracle::independence_number(&g));
    }

    #[test]
    fn freeness_matches_generic(g in arb_graph(2, 12), k in 1usize..=4) {
        let generic = find_induced(&g, &p2kp1_pattern(k).unwrap()).is_none();
        prop_assert_eq!(is_p2kp1_free(&g, k).unwrap(), generic);
        prop_assert_eq!(generic, !oracle::has_induced_p2_kp1(&g, k));
    }
}
