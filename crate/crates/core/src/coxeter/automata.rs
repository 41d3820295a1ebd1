//! Automata for reduced words and shortlex normal forms, with states given by
//! sets of minimal roots.
//!
//! After reading a reduced word `w` the state is the set of minimal roots
//! sent negative by `w`. Appending `s` is allowed when `alpha_s` is not in the
//! set, and the new set is `{alpha_s}` together with the minimal images under
//! `s` of the old members.

use std::collections::{HashMap, VecDeque};

use super::roots::{minimal_roots, MinimalRootTable, RootAction};
use super::CoxeterSystem;
use crate::automaton::{determinize_capped, minimize, reverse, Automaton};
use crate::caps::Caps;
use crate::error::Result;

type RootSet = Vec<usize>;

fn successor(table: &MinimalRootTable, set: &RootSet, s: usize) -> Option<RootSet> {
    if set.binary_search(&s).is_ok() {
        return None;
    }
    let mut next = vec![s];
    for &r in set {
        match table.action[s][r] {
            RootAction::Minimal(j) => next.push(j),
            RootAction::Fixed => next.push(r),
            RootAction::Descent | RootAction::NonMinimal => {}
        }
    }
    next.sort_unstable();
    next.dedup();
    Some(next)
}

/// Breadth-first subset construction; `step` returns the successor set or `None`.
fn explore(
    sys: &CoxeterSystem,
    caps: &Caps,
    step: impl Fn(&RootSet, usize) -> Option<RootSet>,
) -> Result<Automaton> {
    let mut ids: HashMap<RootSet, usize> = HashMap::new();
    let mut sets: Vec<RootSet> = vec![Vec::new()];
    ids.insert(Vec::new(), 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        for s in 0..sys.rank() {
            let Some(next) = step(&sets[q], s) else { continue };
            let target = match ids.get(&next) {
                Some(&t) => t,
                None => {
                    let t = sets.len();
                    Caps::check(t + 1, caps.states, "automaton states")?;
                    ids.insert(next.clone(), t);
                    sets.push(next);
                    queue.push_back(t);
                    t
                }
            };
            edges.push((q, s, target));
        }
    }
    let n = sets.len();
    Automaton::new(sys.alphabet().clone(), n, 0, 0..n, edges)
}

/// DFA accepting exactly the reduced words, with subset states numbered in
/// breadth-first order (not minimized).
pub fn reduced_word_automaton(sys: &CoxeterSystem, caps: &Caps) -> Result<Automaton> {
    let table = minimal_roots(sys, caps)?;
    explore(sys, caps, |set, s| successor(&table, set, s))
}

/// Minimal DFA accepting the shortlex normal forms for the generator order of `sys`.
///
/// A word `s_1 ... s_n` is a normal form exactly when each `s_i` is the least
/// left descent of `s_i ... s_n`. Reading the word backwards, the left
/// descents of the suffix are the simple roots in the state, so the reversed
/// language has a subset automaton; it is reversed back and minimized.
pub fn shortlex_automaton(sys: &CoxeterSystem, caps: &Caps) -> Result<Automaton> {
    let table = minimal_roots(sys, caps)?;
    let reversed = explore(sys, caps, |set, s| {
        let next = successor(&table, set, s)?;
        // The simple roots come first, so `t < s` means index `t < s`.
        if next.iter().take_while(|&&r| r < s).next().is_some() {
            None
        } else {
            Some(next)
        }
    })?;
    let forward = determinize_capped(&reverse(&reversed), caps.states)?;
    minimize(&forward)
}
