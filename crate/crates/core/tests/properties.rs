mod common;

use common::*;
use endvertex::decide::{
    hamiltonian_path_interval, is_hamiltonian_path, mcs_interval_sufficient, Sufficiency,
};
use endvertex::graph::minimal_separators_chordal;
use endvertex::oracle::{
    endvertex_set_by_enumeration, endvertex_set_exhaustive, is_endvertex_exhaustive,
};
use endvertex::recognize::{
    is_claw_net_free, is_hole, is_unit_interval_order, is_weakly_chordal_desk, recognize_chordal,
    recognize_interval, recognize_split, recognize_unit_interval, Chordality,
};
use endvertex::reduction::CnfFormula;
use endvertex::search::peo_check;
use endvertex::{
    eligible_set, run_search, validate_order, Graph, SearchKind, SearchPrefix, TieBreakPolicy,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn kind() -> impl Strategy<Value = SearchKind> {
    prop::sample::select(SearchKind::ALL.to_vec())
}

proptest! {
    #[test]
    fn generated_orders_validate(seed: u64, n in 1usize..14, p in 0.0f64..0.7, k in kind(), tie: u64) {
        let g = random_connected(&mut rng(seed), n, p);
        let start = (tie as usize) % n;
        let o = run_search(k, &g, Some(start), &TieBreakPolicy::SeededRandom(tie)).unwrap();
        prop_assert_eq!(o.first(), Some(start));
        prop_assert!(validate_order(k, &g, &o).unwrap().is_valid());
    }

    #[test]
    fn every_valid_prefix_has_an_eligible_vertex(seed: u64, n in 1usize..12, k in kind(), tie: u64) {
        let g = random_connected(&mut rng(seed), n, 0.3);
        let o = run_search(k, &g, None, &TieBreakPolicy::SeededRandom(tie)).unwrap();
        let mut prefix = SearchPrefix::new(&g, None).unwrap();
        for &v in o.as_slice() {
            let eligible = eligible_set(k, &g, &prefix).unwrap();
            prop_assert!(eligible.contains(v));
            prefix.push(&g, v);
        }
        prop_assert!(eligible_set(k, &g, &prefix).unwrap().is_empty());
    }

    #[test]
    fn state_oracle_matches_full_enumeration(seed: u64, n in 1usize..7, p in 0.0f64..0.8, k in kind()) {
        let g = random_connected(&mut rng(seed), n, p);
        let by_state = endvertex_set_exhaustive(&g, k, None, 12).unwrap();
        let by_orders = endvertex_set_by_enumeration(&g, k, None, 12).unwrap();
        prop_assert_eq!(by_state, by_orders);
    }

    #[test]
    fn membership_witness_is_valid(seed: u64, n in 1usize..8, k in kind(), t_pick: usize) {
        let g = random_connected(&mut rng(seed), n, 0.4);
        let t = t_pick % n;
        if let Some(w) = is_endvertex_exhaustive(&g, k, t, None, 12).unwrap() {
            prop_assert_eq!(w.last(), Some(t));
            prop_assert!(validate_order(k, &g, &w).unwrap().is_valid());
        } else {
            prop_assert!(!endvertex_set_exhaustive(&g, k, None, 12).unwrap().contains(t));
        }
    }

    #[test]
    fn chordal_certificates(seed: u64, n in 1usize..12, p in 0.0f64..0.6, chordal: bool) {
        let g = if chordal { random_chordal(&mut rng(seed), n) } else { random_connected(&mut rng(seed), n, p) };
        match recognize_chordal(&g).unwrap() {
            Chordality::Chordal(peo) => {
                prop_assert!(peo_check(&g, &peo));
                prop_assert!(!brute_has_hole(&g, 4));
            }
            Chordality::Hole(c) => {
                prop_assert!(!chordal);
                prop_assert!(c.len() >= 4 && is_hole(&g, &c));
            }
        }
    }

    #[test]
    fn minimal_separators_match_brute_force(seed: u64, n in 1usize..10) {
        let g = random_chordal(&mut rng(seed), n);
        let mut got: Vec<Vec<usize>> = minimal_separators_chordal(&g).unwrap().iter().map(|s| s.to_vec()).collect();
        got.sort();
        let mut want = brute_minimal_separators(&g);
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn split_recognition_matches_brute_force(seed: u64, n in 1usize..10, p in 0.0f64..0.9, split: bool) {
        let g = if split { random_split(&mut rng(seed), n) } else { random_connected(&mut rng(seed), n, p) };
        let found = recognize_split(&g);
        prop_assert_eq!(found.is_some(), brute_is_split(&g));
        if let Some(part) = found {
            prop_assert!(part.is_valid_for(&g));
        }
    }

    #[test]
    fn interval_recognition(seed: u64, n in 1usize..10, interval: bool) {
        let g = if interval { random_interval(&mut rng(seed), n).0 } else { random_chordal(&mut rng(seed), n) };
        match recognize_interval(&g).unwrap() {
            Some(order) => {
                prop_assert!(order.is_valid_for(&g));
                let mut got: Vec<Vec<usize>> = order.cliques.iter().map(|c| { let mut c = c.clone(); c.sort_unstable(); c }).collect();
                got.sort();
                let mut want = brute_maximal_cliques(&g);
                want.sort();
                prop_assert_eq!(got, want);
            }
            None => prop_assert!(!interval),
        }
    }

    #[test]
    fn unit_interval_recognition(seed: u64, n in 1usize..10, unit: bool) {
        let g = if unit { random_unit_interval(&mut rng(seed), n) } else { random_interval(&mut rng(seed), n).0 };
        let exists = (0..n).any(|t| unit_interval_order_from(&g, t));
        match recognize_unit_interval(&g).unwrap() {
            Some(order) => {
                prop_assert!(is_unit_interval_order(&g, &order));
                prop_assert!(brute_is_unit_interval_order(&g, order.as_slice()));
            }
            None => prop_assert!(!exists && !unit),
        }
    }

    #[test]
    fn hamiltonian_path_on_interval_graphs(seed: u64, n in 1usize..11) {
        let (g, _) = random_interval(&mut rng(seed), n);
        let all: Vec<usize> = (0..n).collect();
        match hamiltonian_path_interval(&g).unwrap() {
            Some(path) => prop_assert!(is_hamiltonian_path(&g, &path)),
            None => prop_assert!(!ham_path_dp(&g, &all)),
        }
    }

    #[test]
    fn cut_vertices_match_brute_force(seed: u64, n in 1usize..14, p in 0.0f64..0.4) {
        let g = random_connected(&mut rng(seed), n, p);
        prop_assert_eq!(g.cut_vertices().unwrap().to_vec(), brute_cut_vertices(&g));
    }

    #[test]
    fn forbidden_subgraph_checks(seed: u64, n in 1usize..9, p in 0.0f64..0.8) {
        let g = random_connected(&mut rng(seed), n, p);
        prop_assert_eq!(is_claw_net_free(&g), !brute_has_claw(&g) && !brute_has_net(&g));
        prop_assert_eq!(is_weakly_chordal_desk(&g, 64).unwrap(), brute_weakly_chordal(&g));
    }

    #[test]
    fn interval_mcs_sufficiency_is_sound(seed: u64, n in 2usize..9, t_pick: usize) {
        let (g, _) = random_interval(&mut rng(seed), n);
        let t = t_pick % n;
        let order = recognize_interval(&g).unwrap().unwrap();
        if mcs_interval_sufficient(&g, &order, t).unwrap() == Sufficiency::Yes {
            prop_assert!(endvertex_set_exhaustive(&g, SearchKind::Mcs, None, 18).unwrap().contains(t));
        }
    }

    #[test]
    fn dimacs_round_trip(seed: u64, k in 3usize..8, l in 0usize..10) {
        let f = random_cnf(&mut rng(seed), k, l);
        prop_assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }
}

#[test]
fn generators_produce_their_classes() {
    let mut r = rng(1);
    for n in 1..10 {
        let g: Graph = random_split(&mut r, n);
        assert!(brute_is_split(&g));
        assert!(random_chordal(&mut r, n).is_connected());
        assert!(random_claw_net_free(&mut r, n.max(3)).is_connected());
    }
}
