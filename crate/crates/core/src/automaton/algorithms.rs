use std::collections::{HashMap, VecDeque};

use super::{Automaton, Word};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// Keeps only states that are reachable and co-reachable, preserving their relative order.
///
/// When no accept state is reachable the result is the one-state empty-language automaton.
pub fn trim(a: &Automaton) -> Automaton {
    let reach = a.reachable();
    let co = a.coreachable();
    let useful: Vec<bool> = (0..a.num_states()).map(|q| reach[q] && co[q]).collect();
    if !useful[a.start()] {
        return Automaton::empty_language(a.alphabet().clone());
    }
    let mut index = vec![usize::MAX; a.num_states()];
    let mut next = 0;
    for q in 0..a.num_states() {
        if useful[q] {
            index[q] = next;
            next += 1;
        }
    }
    let k = a.alphabet().len();
    let mut delta = vec![vec![Vec::new(); k]; next];
    let mut accept = vec![false; next];
    for q in (0..a.num_states()).filter(|&q| useful[q]) {
        accept[index[q]] = a.is_accepting(q);
        for l in 0..k {
            delta[index[q]][l] = a
                .targets(q, l)
                .iter()
                .filter(|&&t| useful[t])
                .map(|&t| index[t])
                .collect();
        }
    }
    Automaton::from_parts(a.alphabet().clone(), index[a.start()], accept, delta)
}

/// Subset construction under the default state cap.
pub fn determinize(a: &Automaton) -> Result<Automaton> {
    determinize_capped(a, Caps::default().states)
}

/// Subset construction. States are the nonempty reachable subsets, numbered
/// in breadth-first discovery order with letters taken in ascending order.
pub fn determinize_capped(a: &Automaton, max_states: usize) -> Result<Automaton> {
    let k = a.alphabet().len();
    let start = vec![a.start()];
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start];
    let mut delta: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut row = vec![Vec::new(); k];
        for (l, slot) in row.iter_mut().enumerate() {
            let mut target: Vec<usize> =
                subsets[i].iter().flat_map(|&q| a.targets(q, l).iter().copied()).collect();
            if target.is_empty() {
                continue;
            }
            target.sort_unstable();
            target.dedup();
            let id = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    Caps::check(id + 1, max_states, "determinization states")?;
                    ids.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            slot.push(id);
        }
        delta.push(row);
        i += 1;
    }
    let accept = subsets.iter().map(|s| s.iter().any(|&q| a.is_accepting(q))).collect();
    Ok(Automaton::from_parts(a.alphabet().clone(), 0, accept, delta))
}

/// Renumbers a deterministic automaton in BFS order from the start, dropping
/// unreachable states.
pub(crate) fn canonical(a: &Automaton) -> Automaton {
    debug_assert!(a.is_deterministic());
    let k = a.alphabet().len();
    let mut index = vec![usize::MAX; a.num_states()];
    let mut order = vec![a.start()];
    index[a.start()] = 0;
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        for l in 0..k {
            if let Some(t) = a.step(q, l) {
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        i += 1;
    }
    let delta = order
        .iter()
        .map(|&q| (0..k).map(|l| a.step(q, l).map(|t| vec![index[t]]).unwrap_or_default()).collect())
        .collect();
    let accept = order.iter().map(|&q| a.is_accepting(q)).collect();
    Automaton::from_parts(a.alphabet().clone(), 0, accept, delta)
}

/// Minimal partial DFA of the language, canonically numbered.
///
/// Rejects nondeterministic input. Refinement is Moore's algorithm on the
/// trimmed automaton, where a missing transition is its own class.
pub fn minimize(a: &Automaton) -> Result<Automaton> {
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    let t = trim(a);
    if t.is_empty_language() {
        return Ok(Automaton::empty_language(a.alphabet().clone()));
    }
    let n = t.num_states();
    let k = t.alphabet().len();
    let mut class: Vec<usize> = (0..n).map(|q| usize::from(t.is_accepting(q))).collect();
    let mut num_classes = if class.iter().all(|&c| c == class[0]) { 1 } else { 2 };
    if num_classes == 1 {
        class.iter_mut().for_each(|c| *c = 0);
    }
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![0; n];
        for q in 0..n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            sig.extend((0..k).map(|l| t.step(q, l).map_or(usize::MAX, |r| class[r])));
            let fresh = ids.len();
            next[q] = *ids.entry(sig).or_insert(fresh);
        }
        let count = ids.len();
        class = next;
        if count == num_classes {
            break;
        }
        num_classes = count;
    }
    let mut delta = vec![vec![Vec::new(); k]; num_classes];
    let mut accept = vec![false; num_classes];
    for q in 0..n {
        accept[class[q]] = t.is_accepting(q);
        for l in 0..k {
            if let Some(r) = t.step(q, l) {
                delta[class[q]][l] = vec![class[r]];
            }
        }
    }
    let quotient = Automaton::from_parts(t.alphabet().clone(), class[t.start()], accept, delta);
    Ok(canonical(&quotient))
}

/// Automaton of the letter-reversed language.
///
/// Every transition is reversed, the old start becomes the only accept state,
/// and a fresh start state (index `n`) copies the reversed out-edges of every
/// old accept state. The fresh start accepts iff the old start accepted.
pub fn reverse(a: &Automaton) -> Automaton {
    let n = a.num_states();
    let k = a.alphabet().len();
    let mut delta = vec![vec![Vec::new(); k]; n + 1];
    for (s, l, t) in a.transitions() {
        delta[t][l].push(s);
        if a.is_accepting(t) {
            delta[n][l].push(s);
        }
    }
    for row in &mut delta {
        for ts in row.iter_mut() {
            ts.sort_unstable();
            ts.dedup();
        }
    }
    let mut accept = vec![false; n + 1];
    accept[a.start()] = true;
    accept[n] = a.is_accepting(a.start());
    Automaton::from_parts(a.alphabet().clone(), n, accept, delta)
}

/// Outcome of a language comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// A shortest word (least in shortlex order among shortest ones) accepted
    /// by exactly one of the two automata.
    Differ(Word),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

/// Language equality. `b`'s letters are matched to `a`'s by name.
pub fn equivalent(a: &Automaton, b: &Automaton) -> Result<Equivalence> {
    let b = b.with_alphabet_order(a.alphabet())?;
    let da = if a.is_deterministic() { a.clone() } else { determinize(a)? };
    let db = if b.is_deterministic() { b } else { determinize(&b)? };
    let k = da.alphabet().len();
    type Pair = (Option<usize>, Option<usize>);
    let accepting = |p: &Pair| {
        (p.0.is_some_and(|q| da.is_accepting(q)), p.1.is_some_and(|q| db.is_accepting(q)))
    };
    let start: Pair = (Some(da.start()), Some(db.start()));
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let (x, y) = accepting(&p);
        if x != y {
            let mut letters = Vec::new();
            let mut cur = p;
            while let Some(Some((prev, l))) = parent.get(&cur) {
                letters.push(*l);
                cur = *prev;
            }
            letters.reverse();
            return Ok(Equivalence::Differ(Word::new(letters)));
        }
        for l in 0..k {
            let next: Pair = (p.0.and_then(|q| da.step(q, l)), p.1.and_then(|q| db.step(q, l)));
            if next == (None, None) || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, Some((p, l)));
            queue.push_back(next);
        }
    }
    Ok(Equivalence::Equal)
}

/// All accepted words of length at most `maxlen`, in shortlex order.
///
/// Branches that cannot reach an accept state are pruned. `max_words` bounds
/// both the output and the live frontier.
pub fn enumerate(a: &Automaton, maxlen: usize, max_words: usize) -> Result<Vec<Word>> {
    let d = if a.is_deterministic() { a.clone() } else { determinize(a)? };
    let d = trim(&d);
    if d.is_empty_language() {
        return Ok(Vec::new());
    }
    let k = d.alphabet().len();
    let mut out = Vec::new();
    let mut level = vec![(Word::empty(), d.start())];
    for len in 0..=maxlen {
        for (w, q) in &level {
            if d.is_accepting(*q) {
                out.push(w.clone());
                Caps::check(out.len(), max_words, "enumerated words")?;
            }
        }
        if len == maxlen {
            break;
        }
        let mut next = Vec::new();
        for (w, q) in &level {
            for l in 0..k {
                if let Some(t) = d.step(*q, l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push((v, t));
                }
            }
        }
        Caps::check(next.len(), max_words, "enumeration frontier")?;
        level = next;
    }
    Ok(out)
}

/// Number of accepted words of each length `0..=maxlen`, without materialising them.
pub fn count_by_length(a: &Automaton, maxlen: usize) -> Result<Vec<num_bigint::BigUint>> {
    use num_bigint::BigUint;
    use num_traits::Zero;
    let d = if a.is_deterministic() { a.clone() } else { determinize(a)? };
    let n = d.num_states();
    let mut counts = vec![BigUint::zero(); n];
    counts[d.start()] = BigUint::from(1u32);
    let mut out = Vec::with_capacity(maxlen + 1);
    for len in 0..=maxlen {
        out.push((0..n).filter(|&q| d.is_accepting(q)).map(|q| counts[q].clone()).sum());
        if len == maxlen {
            break;
        }
        let mut next = vec![BigUint::zero(); n];
        for (s, _, t) in d.transitions() {
            if !counts[s].is_zero() {
                next[t] += &counts[s];
            }
        }
        counts = next;
    }
    Ok(out)
}
