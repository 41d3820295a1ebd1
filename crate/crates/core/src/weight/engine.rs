use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use super::cycles::{simple_cycles, SimpleCycle};
use super::WeightVector;
use crate::automaton::{
    determinize_capped, equivalent, minimize, sort_shortlex, trim, Automaton, Word,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::Rational;

/// Options shared by the weight-engine entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EngineConfig {
    pub caps: Caps,
    /// Also forbid a circuit-free path from returning to the start state.
    /// By default only the states after the first letter must be distinct.
    pub strict_graph_sense: bool,
}

/// Result of the boundedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundednessReport {
    pub bounded: bool,
    /// A simple cycle of positive weight, present exactly when unbounded.
    pub violating_cycle: Option<SimpleCycle>,
    /// Distinct letter-count vectors of all simple cycles, sorted.
    pub inequalities: Vec<Vec<u64>>,
}

/// Automata for the cell of a bounded weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellAutomata {
    /// Prefix tree of circuit-free words with a fresh copy of every
    /// zero-weight simple circuit hung at each vertex it passes through.
    /// Its language is always contained in the cell.
    pub nfa: Automaton,
    /// Minimal DFA of the cell, read off the longest-path potential
    /// (see [`tight_cell_dfa`]).
    pub dfa: Automaton,
    /// Whether `nfa` recognises the whole cell. It can miss words in which
    /// one zero-weight circuit is entered part way around another.
    pub nfa_is_complete: bool,
}

/// Bound, attaining circuit-free words, and optionally the cell automata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellResult {
    pub bound: Rational,
    /// Circuit-free words of maximal weight, in shortlex order.
    pub witnesses: Vec<Word>,
    pub automata: Option<CellAutomata>,
}

/// A fixed trimmed DFA together with its simple cycles and circuit-free words.
#[derive(Debug, Clone)]
pub struct WeightedLanguage {
    dfa: Automaton,
    config: EngineConfig,
    cycles: Vec<SimpleCycle>,
    cycle_counts: Vec<Vec<u64>>,
    circuit_free: Vec<Word>,
    circuit_free_counts: Vec<Vec<u64>>,
}

impl WeightedLanguage {
    /// Determinizes if necessary, trims, and enumerates cycles and circuit-free words.
    pub fn new(a: &Automaton, config: EngineConfig) -> Result<Self> {
        let det = if a.is_deterministic() {
            a.clone()
        } else {
            determinize_capped(a, config.caps.states)?
        };
        let dfa = trim(&det);
        let cycles = simple_cycles(&dfa, config.caps.cycles)?;
        let k = dfa.alphabet().len();
        let cycle_counts = cycles.iter().map(|c| c.letter_counts(k)).collect();
        let circuit_free = circuit_free_in(&dfa, config.strict_graph_sense, config.caps.words)?;
        let circuit_free_counts = circuit_free.iter().map(|w| w.letter_counts(k)).collect();
        Ok(WeightedLanguage { dfa, config, cycles, cycle_counts, circuit_free, circuit_free_counts })
    }

    /// The trimmed deterministic automaton all results refer to.
    pub fn automaton(&self) -> &Automaton {
        &self.dfa
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// Simple cycles in canonical rotation.
    pub fn cycles(&self) -> &[SimpleCycle] {
        &self.cycles
    }

    /// Circuit-free words in shortlex order.
    pub fn circuit_free_words(&self) -> &[Word] {
        &self.circuit_free
    }

    /// The simple circuit subwords: the label of every rotation of every simple
    /// cycle whose base state is entered by some nonempty prefix.
    pub fn simple_circuit_words(&self) -> Vec<Word> {
        let n = self.dfa.num_states();
        let mut entered = vec![false; n];
        for (_, _, t) in self.dfa.transitions() {
            entered[t] = true;
        }
        let mut words: Vec<Word> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| c.rotated(i)))
            .filter(|r| entered[r.base_state()])
            .map(|r| r.word())
            .collect();
        sort_shortlex(&mut words);
        words
    }

    /// Distinct letter-count vectors of the simple cycles, sorted.
    pub fn inequalities(&self) -> Vec<Vec<u64>> {
        let set: BTreeSet<Vec<u64>> = self.cycle_counts.iter().cloned().collect();
        set.into_iter().collect()
    }

    fn align(&self, phi: &WeightVector) -> Result<WeightVector> {
        if phi.alphabet() == self.dfa.alphabet() {
            Ok(phi.clone())
        } else {
            phi.reordered(self.dfa.alphabet())
        }
    }

    pub fn is_bounded(&self, phi: &WeightVector) -> Result<BoundednessReport> {
        let phi = self.align(phi)?;
        let violating = self
            .cycles
            .iter()
            .zip(&self.cycle_counts)
            .find(|(_, counts)| phi.weight_of_counts(counts).is_positive())
            .map(|(c, _)| c.clone());
        Ok(BoundednessReport {
            bounded: violating.is_none(),
            violating_cycle: violating,
            inequalities: self.inequalities(),
        })
    }

    fn require_bounded(&self, phi: &WeightVector) -> Result<()> {
        let report = self.is_bounded(phi)?;
        if let Some(c) = report.violating_cycle {
            return Err(Error::Unbounded {
                circuit: self.dfa.alphabet().format(&c.word()),
                weight: phi.weight_of_word(&c.word()).to_string(),
            });
        }
        Ok(())
    }

    /// Maximal weight over the language and the circuit-free words attaining it.
    pub fn bound(&self, phi: &WeightVector) -> Result<CellResult> {
        let phi = self.align(phi)?;
        self.require_bounded(&phi)?;
        if self.circuit_free.is_empty() {
            return Err(Error::Precondition("the language is empty, so no bound is attained".into()));
        }
        let weights: Vec<Rational> =
            self.circuit_free_counts.iter().map(|c| phi.weight_of_counts(c)).collect();
        let bound = weights.iter().max().expect("nonempty").clone();
        let witnesses = self
            .circuit_free
            .iter()
            .zip(&weights)
            .filter(|(_, w)| **w == bound)
            .map(|(word, _)| word.clone())
            .collect();
        Ok(CellResult { bound, witnesses, automata: None })
    }

    /// Bound, witnesses and the cell automata.
    pub fn cell(&self, phi: &WeightVector) -> Result<CellResult> {
        let phi = self.align(phi)?;
        let mut result = self.bound(&phi)?;
        let nfa = self.cell_nfa(&phi, &result.bound)?;
        let (tight_bound, dfa) = tight_cell_dfa(self, &phi)?;
        debug_assert_eq!(tight_bound, result.bound);
        let nfa_dfa = determinize_capped(&nfa, self.config.caps.states)?;
        let nfa_is_complete = equivalent(&nfa_dfa, &dfa)?.is_equal();
        result.automata = Some(CellAutomata { nfa, dfa, nfa_is_complete });
        Ok(result)
    }

    /// The cell when every simple cycle has strictly negative weight: then it
    /// consists of the circuit-free witnesses only.
    pub fn strictly_negative_cell(&self, phi: &WeightVector) -> Result<Vec<Word>> {
        let phi = self.align(phi)?;
        self.require_bounded(&phi)?;
        if let Some((c, _)) = self
            .cycles
            .iter()
            .zip(&self.cycle_counts)
            .find(|(_, counts)| phi.weight_of_counts(counts).is_zero())
        {
            return Err(Error::Precondition(format!(
                "simple cycle `{}` has weight zero; use the cell automaton instead",
                self.dfa.alphabet().format(&c.word())
            )));
        }
        Ok(self.bound(&phi)?.witnesses)
    }

    fn cell_nfa(&self, phi: &WeightVector, bound: &Rational) -> Result<Automaton> {
        let k = self.dfa.alphabet().len();
        let mut state_of: Vec<usize> = vec![self.dfa.start()];
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut children: HashMap<(usize, usize), usize> = HashMap::new();
        let mut accept = Vec::new();
        for (word, counts) in self.circuit_free.iter().zip(&self.circuit_free_counts) {
            let mut v = 0;
            for &l in word.letters() {
                v = match children.get(&(v, l)) {
                    Some(&c) => c,
                    None => {
                        let c = state_of.len();
                        let q = self.dfa.step(state_of[v], l).expect("circuit-free word is a path");
                        state_of.push(q);
                        children.insert((v, l), c);
                        edges.push((v, l, c));
                        c
                    }
                };
            }
            if &phi.weight_of_counts(counts) == bound {
                accept.push(v);
            }
        }
        let mut zero_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.dfa.num_states()];
        for (ci, (c, counts)) in self.cycles.iter().zip(&self.cycle_counts).enumerate() {
            if phi.weight_of_counts(counts).is_zero() {
                for (pos, &(q, _)) in c.arcs.iter().enumerate() {
                    zero_at[q].push((ci, pos));
                }
            }
        }
        let tree_size = state_of.len();
        let mut total = tree_size;
        for v in 0..tree_size {
            for &(ci, pos) in &zero_at[state_of[v]] {
                let arcs = &self.cycles[ci].rotated(pos).arcs;
                let len = arcs.len();
                Caps::check(total + len - 1, self.config.caps.states, "cell automaton states")?;
                let mut prev = v;
                for (j, &(_, l)) in arcs.iter().enumerate() {
                    let next = if j + 1 == len {
                        v
                    } else {
                        total += 1;
                        total - 1
                    };
                    edges.push((prev, l, next));
                    prev = next;
                }
            }
        }
        debug_assert!(edges.iter().all(|e| e.1 < k));
        Automaton::new(self.dfa.alphabet().clone(), total, 0, accept, edges)
    }
}

fn circuit_free_in(dfa: &Automaton, strict: bool, max_words: usize) -> Result<Vec<Word>> {
    let n = dfa.num_states();
    let k = dfa.alphabet().len();
    let mut visited = vec![false; n];
    if strict {
        visited[dfa.start()] = true;
    }
    let mut out = Vec::new();
    let mut word = Vec::new();
    // Iterative DFS; each frame is (state, next letter to try).
    let mut frames = vec![(dfa.start(), 0usize)];
    if dfa.is_accepting(dfa.start()) {
        out.push(Word::empty());
    }
    while let Some(frame) = frames.last_mut() {
        let (q, l) = *frame;
        if l == k {
            frames.pop();
            if !word.is_empty() {
                word.pop();
                visited[q] = false;
            }
            continue;
        }
        frame.1 += 1;
        if let Some(t) = dfa.step(q, l) {
            if !visited[t] {
                visited[t] = true;
                word.push(l);
                if dfa.is_accepting(t) {
                    out.push(Word::new(word.clone()));
                    Caps::check(out.len(), max_words, "circuit-free words")?;
                }
                frames.push((t, 0));
            }
        }
    }
    sort_shortlex(&mut out);
    Ok(out)
}

/// Circuit-free accepted words of a deterministic automaton, in shortlex order.
pub fn circuit_free_words(a: &Automaton, config: EngineConfig) -> Result<Vec<Word>> {
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    circuit_free_in(&trim(a), config.strict_graph_sense, config.caps.words)
}

pub fn is_bounded(a: &Automaton, phi: &WeightVector, config: EngineConfig) -> Result<BoundednessReport> {
    WeightedLanguage::new(a, config)?.is_bounded(phi)
}

pub fn bound(a: &Automaton, phi: &WeightVector, config: EngineConfig) -> Result<CellResult> {
    WeightedLanguage::new(a, config)?.bound(phi)
}

pub fn cell_automaton(a: &Automaton, phi: &WeightVector, config: EngineConfig) -> Result<CellResult> {
    WeightedLanguage::new(a, config)?.cell(phi)
}

pub fn strictly_negative_cell(
    a: &Automaton,
    phi: &WeightVector,
    config: EngineConfig,
) -> Result<Vec<Word>> {
    WeightedLanguage::new(a, config)?.strictly_negative_cell(phi)
}

/// Splits a non-circuit-free word `w = x.v.y` at its first repeated state:
/// `v` labels a simple circuit based at `state(x)`, and `x.y` follows a path
/// ending where `w` ends. Returns `None` for circuit-free words and for words
/// that are not paths of the deterministic automaton `a`.
pub fn excise_first_circuit(a: &Automaton, w: &Word, strict: bool) -> Option<(Word, Word, Word)> {
    let path = a.state_path(w)?;
    let mut seen: HashMap<usize, usize> = HashMap::new();
    if strict {
        seen.insert(path[0], 0);
    }
    for (j, &q) in path.iter().enumerate().skip(1) {
        if let Some(&i) = seen.get(&q) {
            let l = w.letters();
            return Some((
                Word::new(l[..i].to_vec()),
                Word::new(l[i..j].to_vec()),
                Word::new(l[j..].to_vec()),
            ));
        }
        seen.insert(q, j);
    }
    None
}

/// The cell read off a longest-path potential.
///
/// With `g(q)` the largest weight of a path from the start to `q` (finite for
/// a bounded weight), an accepted word attains the bound exactly when every
/// arc `q --s--> q'` it uses satisfies `g(q) + phi(s) = g(q')` and it ends in
/// an accept state with `g = bound`. The result is the minimal DFA of that
/// sub-automaton.
pub fn tight_cell_dfa(lang: &WeightedLanguage, phi: &WeightVector) -> Result<(Rational, Automaton)> {
    let phi = lang.align(phi)?;
    lang.require_bounded(&phi)?;
    let dfa = lang.automaton();
    let n = dfa.num_states();
    let edges: Vec<(usize, usize, usize)> = dfa.transitions().collect();
    let mut g: Vec<Option<Rational>> = vec![None; n];
    g[dfa.start()] = Some(Rational::zero());
    for _ in 0..n {
        let mut changed = false;
        for &(s, l, t) in &edges {
            if let Some(gs) = &g[s] {
                let cand = gs + phi.value(l);
                if g[t].as_ref().is_none_or(|gt| cand > *gt) {
                    g[t] = Some(cand);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let bound = (0..n)
        .filter(|&q| dfa.is_accepting(q))
        .filter_map(|q| g[q].clone())
        .max()
        .ok_or_else(|| Error::Precondition("the language is empty, so no bound is attained".into()))?;
    let tight: Vec<(usize, usize, usize)> = edges
        .into_iter()
        .filter(|&(s, l, t)| match (&g[s], &g[t]) {
            (Some(gs), Some(gt)) => &(gs + phi.value(l)) == gt,
            _ => false,
        })
        .collect();
    let accept: Vec<usize> =
        (0..n).filter(|&q| dfa.is_accepting(q) && g[q].as_ref() == Some(&bound)).collect();
    let sub = Automaton::new(dfa.alphabet().clone(), n, dfa.start(), accept, tight)?;
    Ok((bound, minimize(&sub)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::enumerate;
    use crate::field::int;

    fn dihedral() -> Automaton {
        Automaton::from_named(
            &["s", "t"],
            3,
            0,
            [0, 1, 2],
            &[(0, "s", 1), (0, "t", 2), (1, "t", 2), (2, "s", 1)],
        )
        .unwrap()
    }

    fn phi(a: &Automaton, v: &[i64]) -> WeightVector {
        WeightVector::from_ints(a.alphabet(), v).unwrap()
    }

    #[test]
    fn dihedral_circuits_and_circuit_free_words() {
        let a = dihedral();
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let words: Vec<String> =
            lang.simple_circuit_words().iter().map(|w| a.alphabet().format(w)).collect();
        assert_eq!(words, ["st", "ts"]);
        let cf: Vec<String> =
            lang.circuit_free_words().iter().map(|w| a.alphabet().format(w)).collect();
        assert_eq!(cf, ["ε", "s", "t", "st", "ts"]);
        assert_eq!(lang.inequalities(), vec![vec![1, 1]]);
    }

    #[test]
    fn dihedral_bound_and_cell() {
        let a = dihedral();
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let res = lang.cell(&phi(&a, &[1, -1])).unwrap();
        assert_eq!(res.bound, int(1));
        let cell = res.automata.unwrap();
        let words = enumerate(&cell.dfa, 5, 100).unwrap();
        let text: Vec<String> = words.iter().map(|w| a.alphabet().format(w)).collect();
        assert_eq!(text, ["s", "sts", "ststs"]);
        assert!(cell.nfa_is_complete);
        assert!(equivalent(&cell.nfa, &cell.dfa).unwrap().is_equal());
        let (b, tight) = tight_cell_dfa(&lang, &phi(&a, &[1, -1])).unwrap();
        assert_eq!(b, int(1));
        assert_eq!(tight, cell.dfa);
    }

    #[test]
    fn unbounded_reports_a_circuit() {
        let a = dihedral();
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let report = lang.is_bounded(&phi(&a, &[1, 0])).unwrap();
        assert!(!report.bounded);
        let c = report.violating_cycle.unwrap();
        assert_eq!(c.letter_counts(2), vec![1, 1]);
        assert!(matches!(lang.bound(&phi(&a, &[1, 0])), Err(Error::Unbounded { .. })));
    }

    #[test]
    fn strictly_negative_fast_path() {
        let a = dihedral();
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let cell = lang.strictly_negative_cell(&phi(&a, &[1, -2])).unwrap();
        assert_eq!(cell, vec![Word::new(vec![0])]);
        assert!(matches!(
            lang.strictly_negative_cell(&phi(&a, &[1, -1])),
            Err(Error::Precondition(_))
        ));
        let neg = lang.strictly_negative_cell(&phi(&a, &[-1, -1])).unwrap();
        assert_eq!(neg, vec![Word::empty()]);
    }

    #[test]
    fn strict_convention_differs_only_when_start_is_reentered() {
        // A single state with a loop: the start is re-entered immediately.
        let a = Automaton::from_named(&["s"], 1, 0, [0], &[(0, "s", 0)]).unwrap();
        let loose = circuit_free_words(&a, EngineConfig::default()).unwrap();
        assert_eq!(loose.len(), 2);
        let strict = EngineConfig { strict_graph_sense: true, ..EngineConfig::default() };
        assert_eq!(circuit_free_words(&a, strict).unwrap(), vec![Word::empty()]);
        let b = dihedral();
        assert_eq!(
            circuit_free_words(&b, strict).unwrap(),
            circuit_free_words(&b, EngineConfig::default()).unwrap()
        );
    }

    #[test]
    fn excision_of_first_circuit() {
        let a = dihedral();
        let w = a.alphabet().parse_word("ststs").unwrap();
        let (x, v, y) = excise_first_circuit(&a, &w, false).unwrap();
        assert_eq!(a.alphabet().format(&x), "s");
        assert_eq!(a.alphabet().format(&v), "ts");
        assert_eq!(a.alphabet().format(&y), "ts");
        assert_eq!(a.run(&x.concat(&y)), a.run(&w));
        assert!(excise_first_circuit(&a, &a.alphabet().parse_word("st").unwrap(), false).is_none());
    }

    #[test]
    fn appended_circuits_miss_nested_zero_circuits() {
        // The d-loop at state 2 sits inside the zero circuit bc through state 1.
        let a = Automaton::from_named(
            &["a", "b", "c", "d"],
            3,
            0,
            [1],
            &[(0, "a", 1), (1, "b", 2), (2, "c", 1), (2, "d", 2)],
        )
        .unwrap();
        let lang = WeightedLanguage::new(&a, EngineConfig::default()).unwrap();
        let res = lang.cell(&phi(&a, &[0, 0, 0, 0])).unwrap();
        let cell = res.automata.unwrap();
        assert!(!cell.nfa_is_complete);
        let nested = a.alphabet().parse_word("abdc").unwrap();
        assert!(cell.dfa.accepts(&nested));
        assert!(!cell.nfa.accepts(&nested));
        // Everything the construction accepts is in the cell.
        let inter = crate::automaton::enumerate(&cell.nfa, 8, 10_000).unwrap();
        assert!(inter.iter().all(|w| cell.dfa.accepts(w)));
        assert_eq!(equivalent(&cell.dfa, &a).unwrap(), crate::automaton::Equivalence::Equal);
    }
}
