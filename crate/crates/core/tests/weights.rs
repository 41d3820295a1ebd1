mod common;

use common::{automaton_strategy, bounded_weight, fixture, random_rational};
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weightcell::automaton::{enumerate, Automaton, Word};
use weightcell::cone::cone_from_circuits;
use weightcell::weight::{excise_first_circuit, EngineConfig, WeightVector, WeightedLanguage};

const FIXTURES: [&str; 5] = ["infinite_dihedral.json", "fig1.json", "fig2.json", "fig4.json", "one_loop.json"];

fn nonempty(a: &Automaton) -> bool {
    !a.is_empty_language()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rotations_of_a_cycle_have_equal_letter_counts(a in automaton_strategy(true)) {
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        for c in lang.cycles() {
            let counts = c.letter_counts(2);
            for i in 0..c.len() {
                prop_assert_eq!(c.rotated(i).letter_counts(2), counts.clone());
            }
        }
    }

    #[test]
    fn bound_and_cell_match_enumeration(a in automaton_strategy(false), seed in any::<u64>()) {
        prop_assume!(nonempty(&a));
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let phi = bounded_weight(&lang, &mut ChaCha8Rng::seed_from_u64(seed));
        let r = lang.cell(&phi).unwrap();
        let l = 2 * lang.automaton().num_states();
        let words = enumerate(&a, l, usize::MAX).unwrap();
        let best = words.iter().map(|w| phi.weight_of_word(w)).max().unwrap();
        prop_assert_eq!(&best, &r.bound);
        let cell = r.automata.unwrap().dfa;
        let expected: Vec<&Word> = words.iter().filter(|w| phi.weight_of_word(w) == best).collect();
        let got = enumerate(&cell, l, usize::MAX).unwrap();
        prop_assert_eq!(got.iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn excision_keeps_the_end_state(a in automaton_strategy(false), pick in any::<prop::sample::Index>()) {
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let dfa = lang.automaton();
        let words = enumerate(dfa, 9, usize::MAX).unwrap();
        prop_assume!(!words.is_empty());
        let w = pick.get(&words);
        for strict in [false, true] {
            if let Some((x, v, y)) = excise_first_circuit(dfa, w, strict) {
                let shorter = x.concat(&y);
                prop_assert!(dfa.accepts(&shorter));
                prop_assert_eq!(dfa.run(&shorter), dfa.run(w));
                prop_assert!(!v.is_empty());
                prop_assert!(lang.inequalities().contains(&v.letter_counts(2)));
            }
        }
    }

    #[test]
    fn bounded_weights_form_a_convex_cone(a in automaton_strategy(false), seed in any::<u64>()) {
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        prop_assume!(!lang.cycles().is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = bounded_weight(&lang, &mut rng);
        let q = bounded_weight(&lang, &mut rng);
        let (l1, l2) = (random_rational(&mut rng, 3).abs(), random_rational(&mut rng, 3).abs());
        let sum = p.values().iter().zip(q.values()).map(|(x, y)| x * &l1 + y * &l2).collect();
        let combo = WeightVector::new(p.alphabet().clone(), sum).unwrap();
        prop_assert!(lang.is_bounded(&combo).unwrap().bounded);
    }
}

#[test]
fn membership_coherence_on_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in FIXTURES {
        let a = fixture(name);
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let k = a.alphabet().len();
        let h = cone_from_circuits(k, &lang.inequalities()).unwrap();
        for _ in 0..500 {
            let values: Vec<_> = (0..k).map(|_| random_rational(&mut rng, 3)).collect();
            let phi = WeightVector::new(a.alphabet().clone(), values.clone()).unwrap();
            assert_eq!(h.contains(&values).unwrap(), lang.is_bounded(&phi).unwrap().bounded, "{name} {phi}");
        }
    }
}

#[test]
fn cells_of_fixtures_are_nonempty() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in FIXTURES {
        let lang = WeightedLanguage::new(&fixture(name), EngineConfig::default()).unwrap();
        for _ in 0..20 {
            let phi = bounded_weight(&lang, &mut rng);
            let cell = lang.cell(&phi).unwrap().automata.unwrap().dfa;
            assert!(!cell.is_empty_language(), "{name} {phi}");
        }
    }
}

#[test]
fn empty_language_has_no_bound() {
    let a = fixture("empty.json");
    let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
    let phi = WeightVector::parse("s=1,t=1", a.alphabet()).unwrap();
    assert_eq!(lang.bound(&phi).unwrap_err().exit_code(), 4);
}
