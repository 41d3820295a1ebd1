mod common;

use common::automaton_strategy;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weightcell::automaton::{
    count_by_length, determinize, enumerate, equivalent, minimize, reverse, trim, Automaton,
};

fn permuted(a: &Automaton, seed: u64) -> Automaton {
    let n = a.num_states();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Automaton::new(
        a.alphabet().clone(),
        n,
        perm[a.start()],
        a.accept_states().into_iter().map(|q| perm[q]),
        a.transitions().map(|(p, l, q)| (perm[p], l, perm[q])).collect::<Vec<_>>(),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn json_round_trip(a in automaton_strategy(true)) {
        let back = Automaton::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), a.to_json());
        prop_assert!(equivalent(&back, &a).unwrap().is_equal());
    }

    #[test]
    fn minimal_dfa_has_the_same_words(a in automaton_strategy(true)) {
        let m = minimize(&determinize(&a).unwrap()).unwrap();
        prop_assert_eq!(enumerate(&m, 8, usize::MAX).unwrap(), enumerate(&a, 8, usize::MAX).unwrap());
        prop_assert_eq!(count_by_length(&m, 8).unwrap(), count_by_length(&a, 8).unwrap());
    }

    #[test]
    fn minimize_is_a_fixpoint(a in automaton_strategy(true)) {
        let m = minimize(&determinize(&a).unwrap()).unwrap();
        prop_assert_eq!(minimize(&m).unwrap().to_json(), m.to_json());
    }

    #[test]
    fn double_reverse(a in automaton_strategy(true)) {
        prop_assert!(equivalent(&reverse(&reverse(&a)), &a).unwrap().is_equal());
    }

    #[test]
    fn trim_keeps_the_language(a in automaton_strategy(true)) {
        let t = trim(&a);
        prop_assert!(equivalent(&t, &a).unwrap().is_equal());
        prop_assert!(t.num_states() <= a.num_states());
    }

    #[test]
    fn canonical_numbering_ignores_state_names(a in automaton_strategy(true), seed in any::<u64>()) {
        let m1 = minimize(&determinize(&a).unwrap()).unwrap();
        let m2 = minimize(&determinize(&permuted(&a, seed)).unwrap()).unwrap();
        prop_assert_eq!(m1.to_json(), m2.to_json());
    }

    #[test]
    fn enumerated_words_are_accepted_in_shortlex_order(a in automaton_strategy(true)) {
        let words = enumerate(&a, 6, usize::MAX).unwrap();
        prop_assert!(words.iter().all(|w| a.accepts(w)));
        prop_assert!(words.windows(2).all(|p| p[0].shortlex_cmp(&p[1]).is_lt()));
    }
}
