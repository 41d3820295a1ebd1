#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use rand::Rng;
use weightcell::automaton::{Alphabet, Automaton, Word};
use weightcell::coxeter::CoxeterSystem;
use weightcell::cone::{cone_from_circuits, extreme_rays};
use weightcell::field::Rational;
use weightcell::weight::{WeightVector, WeightedLanguage};
use weightcell::Caps;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn fixture(name: &str) -> Automaton {
    Automaton::from_json(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

/// Automata over `{s, t}` with up to five states; `nondeterministic` allows
/// two targets per state and letter.
pub fn automaton_strategy(nondeterministic: bool) -> impl Strategy<Value = Automaton> {
    (1usize..=5).prop_flat_map(move |n| {
        let fanout = if nondeterministic { 2 } else { 1 };
        let edges = proptest::collection::vec(proptest::collection::vec(0..n, 0..=fanout), n * 2);
        let accept = proptest::collection::vec(any::<bool>(), n);
        (Just(n), edges, accept).prop_map(|(n, edges, accept)| {
            let alphabet = Alphabet::new(["s", "t"]).unwrap();
            let transitions = edges
                .iter()
                .enumerate()
                .flat_map(|(i, targets)| targets.iter().map(move |&t| (i / 2, i % 2, t)));
            let accept = accept.iter().enumerate().filter(|(_, a)| **a).map(|(q, _)| q);
            Automaton::new(alphabet, n, 0, accept, transitions).unwrap()
        })
    })
}

/// A bounded weight: a random nonnegative combination of extreme rays plus a
/// random element of the lineality space, divided by a random denominator.
pub fn bounded_weight(lang: &WeightedLanguage, rng: &mut impl Rng) -> WeightVector {
    let alphabet = lang.automaton().alphabet().clone();
    let k = alphabet.len();
    let h = cone_from_circuits(k, &lang.inequalities()).unwrap();
    let v = extreme_rays(&h, &Caps::default()).unwrap();
    let mut values = vec![Rational::from_integer(0.into()); k];
    for r in &v.rays {
        let c = rng.gen_range(0..4i64);
        for (x, ri) in values.iter_mut().zip(r) {
            *x += Rational::from_integer(ri * c);
        }
    }
    for l in &v.lineality {
        let c = rng.gen_range(-3..4i64);
        for (x, li) in values.iter_mut().zip(l) {
            *x += Rational::from_integer(li * c);
        }
    }
    let d = Rational::from_integer(rng.gen_range(1..4i64).into());
    WeightVector::new(alphabet, values.into_iter().map(|x| x / &d).collect()).unwrap()
}

pub fn random_rational(rng: &mut impl Rng, range: i64) -> Rational {
    Rational::new(rng.gen_range(-range * 6..=range * 6).into(), rng.gen_range(1..=6i64).into())
}

/// Every word up to `maxlen` whose letter-by-letter products never shorten,
/// decided on the matrices of the geometric representation.
pub fn reduced_words(sys: &CoxeterSystem, maxlen: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![(Word::empty(), sys.identity())];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for (w, g) in &frontier {
            for s in 0..sys.rank() {
                if !sys.is_right_descent(g, s) {
                    let mut w2 = w.clone();
                    w2.push(s);
                    next.push((w2, sys.mul_right(g, s)));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}
