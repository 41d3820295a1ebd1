mod common;

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weightcell::automaton::{enumerate, Word};
use weightcell::coxeter::{families, group_cell_in, reduced_word_automaton, shortlex_automaton, CoxeterSystem, Language};
use weightcell::field::Rational;
use weightcell::weight::{EngineConfig, WeightVector, WeightedLanguage};
use weightcell::Caps;

fn systems() -> Vec<(&'static str, CoxeterSystem)> {
    vec![
        ("I2(inf)", families::dihedral(0).unwrap()),
        ("A2", families::type_a(2).unwrap()),
        ("B2", families::type_b(2).unwrap()),
        ("Delta(3,3,3)", families::triangle(3, 3, 3).unwrap()),
        ("Delta(2,4,6)", families::triangle(2, 4, 6).unwrap()),
        ("Delta(2,3,8)", families::triangle(2, 3, 8).unwrap()),
    ]
}

fn valid_weight(sys: &CoxeterSystem, rng: &mut impl Rng) -> WeightVector {
    let mut values = vec![Rational::from_integer(0.into()); sys.rank()];
    for comp in sys.odd_components() {
        let v = common::random_rational(rng, 3);
        for s in comp {
            values[s] = v.clone();
        }
    }
    WeightVector::new(sys.alphabet().clone(), values).unwrap()
}

#[test]
fn languages_match_the_ball() {
    let caps = Caps::default();
    for (name, sys) in systems() {
        let ball = sys.ball(8, &caps).unwrap();
        let lex: BTreeSet<Word> = ball.iter().map(|(_, w)| w.clone()).collect();
        let from_lex: BTreeSet<Word> = enumerate(&shortlex_automaton(&sys, &caps).unwrap(), 8, usize::MAX)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(from_lex, lex, "{name}: shortlex");
        let reduced: BTreeSet<Word> = common::reduced_words(&sys, 8).into_iter().collect();
        let from_reduced: BTreeSet<Word> =
            enumerate(&reduced_word_automaton(&sys, &caps).unwrap(), 8, usize::MAX).unwrap().into_iter().collect();
        assert_eq!(from_reduced, reduced, "{name}: reduced");
    }
}

#[test]
fn shortlex_language_is_prefix_closed() {
    for (name, sys) in systems() {
        let words = enumerate(&shortlex_automaton(&sys, &Caps::default()).unwrap(), 8, usize::MAX).unwrap();
        let set: BTreeSet<&Word> = words.iter().collect();
        for w in &words {
            for k in 0..w.len() {
                assert!(set.contains(&Word::new(w.letters()[..k].to_vec())), "{name}");
            }
        }
    }
}

#[test]
fn valid_weights_are_constant_on_reduced_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, sys) in systems() {
        let phi = valid_weight(&sys, &mut rng);
        let mut seen: HashMap<_, Rational> = HashMap::new();
        for w in common::reduced_words(&sys, 8) {
            let g = sys.element_of_word(&w);
            let v = phi.weight_of_word(&w);
            assert_eq!(seen.entry(g).or_insert_with(|| v.clone()), &v, "{name}");
        }
    }
}

#[test]
fn both_languages_give_the_same_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let config = EngineConfig::default();
    for (name, sys) in systems() {
        let lex = WeightedLanguage::new(&shortlex_automaton(&sys, &config.caps).unwrap(), config).unwrap();
        let red = WeightedLanguage::new(&reduced_word_automaton(&sys, &config.caps).unwrap(), config).unwrap();
        let mut tried = 0;
        while tried < 20 {
            let phi = valid_weight(&sys, &mut rng);
            if !lex.is_bounded(&phi).unwrap().bounded {
                assert!(!red.is_bounded(&phi).unwrap().bounded, "{name} {phi}");
                continue;
            }
            tried += 1;
            let a = lex.cell(&phi).unwrap();
            let b = red.cell(&phi).unwrap();
            assert_eq!(a.bound, b.bound, "{name} {phi}");
            assert!(!a.automata.unwrap().dfa.is_empty_language());
            assert!(!b.automata.unwrap().dfa.is_empty_language());
        }
        if let Some(phi) = (0..50).map(|_| valid_weight(&sys, &mut rng)).find(|p| lex.is_bounded(p).unwrap().bounded) {
            let a = group_cell_in(&sys, &lex, Language::Lex, &phi).unwrap();
            let b = group_cell_in(&sys, &red, Language::Reduced, &phi).unwrap();
            assert_eq!(a.bound, b.bound, "{name} {phi}");
        }
    }
}

#[test]
fn geometric_representation_is_faithful_on_balls() {
    let caps = Caps::default();
    for (name, sys) in systems() {
        let ball = sys.ball(8, &caps).unwrap();
        let distinct: BTreeSet<Vec<String>> = ball
            .iter()
            .map(|(g, _)| (0..sys.rank()).flat_map(|i| (0..sys.rank()).map(move |j| (i, j))).map(|(i, j)| g.entry(i, j).to_string()).collect())
            .collect();
        assert_eq!(distinct.len(), ball.len(), "{name}");
        for s in 0..sys.rank() {
            let g = sys.generator(s);
            assert!(sys.multiply(&g, &g).is_identity(), "{name}");
            for t in 0..sys.rank() {
                let Some(m) = sys.bond(s, t) else { continue };
                let st = sys.multiply(&g, &sys.generator(t));
                let mut p = sys.identity();
                for k in 1..=m {
                    p = sys.multiply(&p, &st);
                    assert_eq!(p.is_identity(), k == m, "{name}: ({s}{t})^{k}");
                }
            }
        }
    }
}
