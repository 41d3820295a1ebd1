//! Finite-state automata over a finite ordered alphabet.
//!
//! A single [`Automaton`] type carries both deterministic and
//! nondeterministic machines. Deterministic results of this module are
//! *partial* DFAs: missing transitions lead to an implicit dead state that is
//! never materialised, so a minimal DFA is also trim.
//!
//! States produced by [`determinize`] and [`minimize`] are numbered in
//! breadth-first discovery order from the start state, following letters in
//! ascending alphabet order. Two minimal DFAs of the same language are
//! therefore equal as values, not merely isomorphic.

mod algorithms;
mod io;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

pub use algorithms::{
    count_by_length, determinize, determinize_capped, enumerate, equivalent, minimize, reverse,
    trim, Equivalence,
};
pub use io::{to_dot, AutomatonDocument};

use crate::error::{Error, Result};

/// Ordered list of distinct letter names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Invalid("alphabet must be nonempty".into()));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::Invalid(format!("duplicate letter names in {names:?}")));
        }
        if let Some(bad) = names.iter().find(|n| n.is_empty() || n.contains(char::is_whitespace)) {
            return Err(Error::Invalid(format!("invalid letter name `{bad}`")));
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: usize) -> &str {
        &self.names[letter]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    fn single_chars(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Renders a word: letters are concatenated when every name is a single
    /// character and separated by `.` otherwise. The empty word renders as `ε`.
    pub fn format(&self, word: &Word) -> String {
        if word.is_empty() {
            return "ε".into();
        }
        let sep = if self.single_chars() { "" } else { "." };
        word.letters().iter().map(|&l| self.name(l)).collect::<Vec<_>>().join(sep)
    }

    /// Parses the textual form produced by [`Alphabet::format`].
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" || text == "()" {
            return Ok(Word::empty());
        }
        let letters = if self.single_chars() && !text.contains('.') {
            text.chars().map(|c| self.index(&c.to_string())).collect::<Result<Vec<_>>>()?
        } else {
            text.split('.').map(|p| self.index(p.trim())).collect::<Result<Vec<_>>>()?
        };
        Ok(Word::new(letters))
    }

    /// Maps each letter of `self` to its index in `other` (same letter set required).
    pub fn permutation_to(&self, other: &Alphabet) -> Result<Vec<usize>> {
        if self.len() != other.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{:?} vs {:?}",
                self.names, other.names
            )));
        }
        self.names
            .iter()
            .map(|n| {
                other.index(n).map_err(|_| {
                    Error::AlphabetMismatch(format!("{:?} vs {:?}", self.names, other.names))
                })
            })
            .collect()
    }
}

/// A word over an alphabet, stored as letter indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `self` is a prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Number of occurrences of each letter, indexed by letter.
    pub fn letter_counts(&self, alphabet_len: usize) -> Vec<u64> {
        let mut counts = vec![0u64; alphabet_len];
        for &l in &self.0 {
            counts[l] += 1;
        }
        counts
    }

    /// Shortlex comparison: by length first, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Sorts words in shortlex order and removes duplicates.
pub fn sort_shortlex(words: &mut Vec<Word>) {
    words.sort_by(|a, b| a.shortlex_cmp(b));
    words.dedup();
}

/// A finite-state automaton `(X, S, o, tau, F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Alphabet,
    start: usize,
    accept: Vec<bool>,
    /// `delta[state][letter]` is the sorted, deduplicated list of targets.
    delta: Vec<Vec<Vec<usize>>>,
}

impl Automaton {
    /// Builds an automaton from explicit transitions `(source, letter, target)`.
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        start: usize,
        accept: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::Invalid("automaton needs at least one state".into()));
        }
        if start >= num_states {
            return Err(Error::Invalid(format!("start state {start} out of range")));
        }
        let mut accept_flags = vec![false; num_states];
        for q in accept {
            if q >= num_states {
                return Err(Error::Invalid(format!("accept state {q} out of range")));
            }
            accept_flags[q] = true;
        }
        let k = alphabet.len();
        let mut delta = vec![vec![Vec::new(); k]; num_states];
        for (src, letter, dst) in transitions {
            if src >= num_states || dst >= num_states {
                return Err(Error::Invalid(format!(
                    "transition ({src}, {letter}, {dst}) references a missing state"
                )));
            }
            if letter >= k {
                return Err(Error::Invalid(format!("transition letter index {letter} out of range")));
            }
            delta[src][letter].push(dst);
        }
        for row in &mut delta {
            for targets in row.iter_mut() {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        Ok(Automaton { alphabet, start, accept: accept_flags, delta })
    }

    /// Convenience constructor using letter names.
    pub fn from_named(
        letters: &[&str],
        num_states: usize,
        start: usize,
        accept: impl IntoIterator<Item = usize>,
        transitions: &[(usize, &str, usize)],
    ) -> Result<Self> {
        let alphabet = Alphabet::new(letters.iter().copied())?;
        let edges = transitions
            .iter()
            .map(|&(s, l, t)| alphabet.index(l).map(|l| (s, l, t)))
            .collect::<Result<Vec<_>>>()?;
        Automaton::new(alphabet, num_states, start, accept, edges)
    }

    /// The automaton accepting nothing: a single non-accepting start state.
    pub fn empty_language(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Automaton { alphabet, start: 0, accept: vec![false], delta: vec![vec![Vec::new(); k]] }
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        start: usize,
        accept: Vec<bool>,
        delta: Vec<Vec<Vec<usize>>>,
    ) -> Self {
        debug_assert_eq!(accept.len(), delta.len());
        Automaton { alphabet, start, accept, delta }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accept[state]
    }

    pub fn accept_states(&self) -> Vec<usize> {
        (0..self.num_states()).filter(|&q| self.accept[q]).collect()
    }

    pub fn targets(&self, state: usize, letter: usize) -> &[usize] {
        &self.delta[state][letter]
    }

    /// The unique target, for deterministic automata.
    pub fn step(&self, state: usize, letter: usize) -> Option<usize> {
        self.delta[state][letter].first().copied()
    }

    /// All transitions sorted by source, letter, target.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(src, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(l, ts)| ts.iter().map(move |&t| (src, l, t)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().map(Vec::len).sum()
    }

    /// At most one target per state and letter.
    pub fn is_deterministic(&self) -> bool {
        self.delta.iter().flatten().all(|ts| ts.len() <= 1)
    }

    /// Path-existence membership test; works for nondeterministic automata.
    pub fn accepts(&self, word: &Word) -> bool {
        let mut current = BTreeSet::from([self.start]);
        for &l in word.letters() {
            if l >= self.alphabet.len() {
                return false;
            }
            current = current.iter().flat_map(|&q| self.delta[q][l].iter().copied()).collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&q| self.accept[q])
    }

    /// End state of the unique path labelled by `word` in a deterministic automaton.
    pub fn run(&self, word: &Word) -> Option<usize> {
        let mut q = self.start;
        for &l in word.letters() {
            q = self.step(q, l)?;
        }
        Some(q)
    }

    /// The sequence of states visited by `word` (deterministic automata).
    pub fn state_path(&self, word: &Word) -> Option<Vec<usize>> {
        let mut path = Vec::with_capacity(word.len() + 1);
        let mut q = self.start;
        path.push(q);
        for &l in word.letters() {
            q = self.step(q, l)?;
            path.push(q);
        }
        Some(path)
    }

    /// States reachable from the start.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(q) = queue.pop_front() {
            for targets in &self.delta[q] {
                for &t in targets {
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        seen
    }

    /// States from which some accept state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds = vec![Vec::new(); n];
        for (s, _, t) in self.transitions() {
            preds[t].push(s);
        }
        let mut seen = self.accept.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// True when no word is accepted.
    pub fn is_empty_language(&self) -> bool {
        let reach = self.reachable();
        !(0..self.num_states()).any(|q| reach[q] && self.accept[q])
    }

    /// The same automaton with letters renamed/reordered to `target`'s order.
    pub fn with_alphabet_order(&self, target: &Alphabet) -> Result<Automaton> {
        let perm = self.alphabet.permutation_to(target)?;
        let edges: Vec<_> = self.transitions().map(|(s, l, t)| (s, perm[l], t)).collect();
        Automaton::new(target.clone(), self.num_states(), self.start, self.accept_states(), edges)
    }
}

impl fmt::Display for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "automaton: {} states, {} transitions, start {}, accept {:?}, alphabet {:?}{}",
            self.num_states(),
            self.num_transitions(),
            self.start,
            self.accept_states(),
            self.alphabet.names(),
            if self.is_deterministic() { ", deterministic" } else { "" }
        )?;
        for (s, l, t) in self.transitions() {
            writeln!(f, "  {s} -{}-> {t}", self.alphabet.name(l))?;
        }
        Ok(())
    }
}
