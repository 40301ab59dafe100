mod common;

use common::{arb_graph, corpus};
use proptest::prelude::*;
use toughham::graph::*;
use toughham::hamilton::*;
use toughham::harness::derive_seed;
use toughham::oracle;
use toughham::structure::{independence_number, is_t_tough, vertex_connectivity};
use toughham::Rational;

fn check_cycle(g: &Graph, c: &OrientedCycle) {
    c.validate(g).unwrap();
    // canonical form: starts at its smallest vertex, second entry below the last
    let o = c.order();
    assert_eq!(o[0], *o.iter().min().unwrap());
    assert!(o.len() < 3 || o[1] < o[o.len() - 1]);
}

#[test]
fn engines_agree_on_corpus() {
    for g in corpus() {
        if g.n() < 3 {
            assert!(matches!(hamiltonian_cycle(&g), Err(toughham::Error::TooSmall(_))));
            continue;
        }
        let code = write_graph6(&g);
        let bt = hamiltonian_cycle(&g).unwrap();
        let dp = hamiltonian_cycle_dp(&g, 22).unwrap();
        assert_eq!(bt.is_some(), dp.is_some(), "{code}");
        assert_eq!(bt.is_some(), oracle::is_hamiltonian(&g), "{code}");
        assert_eq!(bt.is_some(), count_hamiltonian_cycles(&g, 22).unwrap() > 0, "{code}");
        for c in bt.iter().chain(dp.iter()) {
            check_cycle(&g, c);
            assert_eq!(c.len(), g.n());
        }
        let longest = longest_cycle(&g).unwrap();
        assert_eq!(longest.as_ref().map_or(0, |c| c.len()), oracle::longest_cycle_length(&g), "{code}");
        assert_eq!(longest.as_ref().is_some_and(|c| c.len() == g.n()), bt.is_some());
        if let Some(c) = &longest {
            check_cycle(&g, c);
        }
    }
}

#[test]
fn engines_agree_on_random_graphs() {
    for i in 0..500u64 {
        let s = derive_seed(2024, i);
        let n = 10 + (s % 7) as usize;
        let p = Rational::new(3 + (s >> 8) as i64 % 5, 10);
        let g = random_gnp(n, p, s).unwrap();
        let bt = hamiltonian_cycle(&g).unwrap();
        let dp = hamiltonian_cycle_dp(&g, 22).unwrap();
        assert_eq!(bt.is_some(), dp.is_some(), "{}", write_graph6(&g));
        for c in bt.iter().chain(dp.iter()) {
            check_cycle(&g, c);
        }
    }
}

#[test]
fn classical_facts_on_corpus() {
    for g in corpus().into_iter().filter(|g| g.n() >= 3) {
        let ham = is_hamiltonian(&g);
        if ham {
            assert!(is_t_tough(&g, Rational::from_integer(1)).unwrap().is_tough());
        }
        if vertex_connectivity(&g) >= independence_number(&g).0 {
            assert!(ham, "{}", write_graph6(&g));
        }
    }
}

#[test]
fn named_graphs() {
    assert!(hamiltonian_cycle(&complete_bipartite(4, 5).unwrap()).unwrap().is_none());
    assert!(hamiltonian_cycle(&petersen()).unwrap().is_none());
    assert_eq!(longest_cycle(&petersen()).unwrap().unwrap().len(), 9);
    assert_eq!(longest_cycle(&complete_bipartite(2, 4).unwrap()).unwrap().unwrap().len(), 4);
    assert!(longest_cycle(&path(6).unwrap()).unwrap().is_none());
    assert_eq!(hamiltonian_cycle(&complete(10).unwrap()).unwrap().unwrap().order(), &(0..10).collect::<Vec<_>>()[..]);
    assert_eq!(count_hamiltonian_cycles(&complete(6).unwrap(), 22).unwrap(), 60);
}

#[test]
fn caps_are_enforced() {
    let big = complete(30).unwrap();
    assert!(matches!(hamiltonian_cycle_dp(&big, 22), Err(toughham::Error::CapExceeded { .. })));
    assert!(matches!(longest_cycle_with_cap(&big, 18), Err(toughham::Error::CapExceeded { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hamiltonian_iff_spanning_longest(g in arb_graph(3, 11)) {
        let ham = hamiltonian_cycle(&g).unwrap();
        let longest = longest_cycle(&g).unwrap();
        prop_assert_eq!(ham.is_some(), longest.as_ref().is_some_and(|c| c.len() == g.n()));
        prop_assert_eq!(ham.is_some(), hamiltonian_cycle_dp(&g, 22).unwrap().is_some());
        prop_assert_eq!(longest.map_or(0, |c| c.len()), oracle::longest_cycle_length(&g));
    }
}
