//! Elementary circuits of an automaton's transition graph.
//!
//! Johnson's algorithm runs on the underlying simple digraph of states; each
//! state cycle is then expanded over every choice of letters on its arcs.

use std::collections::BTreeSet;

use crate::automaton::{Automaton, Word};
use crate::caps::Caps;
use crate::error::Result;

/// A simple circuit: distinct states, each arc a transition `state --letter-->`.
///
/// `arcs[i] = (q_i, l_i)` means `q_i --l_i--> q_{i+1}` with indices mod the length.
/// Enumerated cycles are stored in their canonical rotation, which starts at the
/// least state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleCycle {
    pub arcs: Vec<(usize, usize)>,
}

impl SimpleCycle {
    pub fn base_state(&self) -> usize {
        self.arcs[0].0
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn states(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().map(|a| a.0)
    }

    pub fn word(&self) -> Word {
        Word::new(self.arcs.iter().map(|a| a.1).collect())
    }

    pub fn letter_counts(&self, alphabet_len: usize) -> Vec<u64> {
        self.word().letter_counts(alphabet_len)
    }

    /// Rotation starting at position `offset`.
    pub fn rotated(&self, offset: usize) -> SimpleCycle {
        let n = self.arcs.len();
        SimpleCycle { arcs: (0..n).map(|i| self.arcs[(i + offset) % n]).collect() }
    }

    /// Rotation based at `state`, if the cycle passes through it.
    pub fn rotated_to(&self, state: usize) -> Option<SimpleCycle> {
        self.arcs.iter().position(|a| a.0 == state).map(|i| self.rotated(i))
    }

    /// Checks that every arc is a transition of `a` and states are distinct.
    pub fn is_valid_in(&self, a: &Automaton) -> bool {
        let n = self.arcs.len();
        let distinct: BTreeSet<usize> = self.states().collect();
        distinct.len() == n
            && (0..n).all(|i| {
                let (q, l) = self.arcs[i];
                a.targets(q, l).contains(&self.arcs[(i + 1) % n].0)
            })
    }
}

/// Every simple circuit of `a`, each once in canonical rotation, sorted.
pub fn simple_cycles(a: &Automaton, max_cycles: usize) -> Result<Vec<SimpleCycle>> {
    let n = a.num_states();
    let k = a.alphabet().len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (s, _, t) in a.transitions() {
        succ[s].push(t);
    }
    for row in &mut succ {
        row.sort_unstable();
        row.dedup();
    }
    let mut out = Vec::new();
    let mut emit = |states: &[usize]| -> Result<()> {
        let len = states.len();
        let choices: Vec<Vec<usize>> = (0..len)
            .map(|i| {
                let (p, q) = (states[i], states[(i + 1) % len]);
                (0..k).filter(|&l| a.targets(p, l).contains(&q)).collect()
            })
            .collect();
        let mut pick = vec![0usize; len];
        loop {
            out.push(SimpleCycle {
                arcs: (0..len).map(|i| (states[i], choices[i][pick[i]])).collect(),
            });
            Caps::check(out.len(), max_cycles, "simple cycles")?;
            let mut i = len;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
            }
        }
    };
    johnson(&succ, &mut emit)?;
    out.sort();
    Ok(out)
}

/// Johnson's algorithm. Cycles are reported starting at their least vertex,
/// which is the root of the subgraph being searched.
fn johnson(succ: &[Vec<usize>], emit: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let n = succ.len();
    for s in 0..n {
        // Restrict to vertices >= s and to the strongly connected component of s.
        let comp = component_of(succ, s);
        if comp.iter().filter(|&&c| c).count() == 0 {
            continue;
        }
        let mut blocked = vec![false; n];
        let mut blist: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut stack = vec![s];
        // Explicit-stack circuit search: frames hold (vertex, next successor index, found).
        let mut frames: Vec<(usize, usize, bool)> = vec![(s, 0, false)];
        blocked[s] = true;
        while let Some(frame) = frames.last_mut() {
            let (v, idx, _) = *frame;
            let nexts = &succ[v];
            if idx < nexts.len() {
                frame.1 += 1;
                let w = nexts[idx];
                if !comp[w] {
                    continue;
                }
                if w == s {
                    emit(&stack)?;
                    frame.2 = true;
                } else if !blocked[w] {
                    blocked[w] = true;
                    stack.push(w);
                    frames.push((w, 0, false));
                }
                continue;
            }
            let (v, _, found) = frames.pop().expect("nonempty");
            stack.pop();
            if found {
                unblock(v, &mut blocked, &mut blist);
            } else {
                for &w in &succ[v] {
                    if comp[w] {
                        blist[w].insert(v);
                    }
                }
            }
            if let Some(parent) = frames.last_mut() {
                parent.2 |= found;
            }
        }
    }
    Ok(())
}

fn unblock(v: usize, blocked: &mut [bool], blist: &mut [BTreeSet<usize>]) {
    let mut work = vec![v];
    while let Some(u) = work.pop() {
        if !blocked[u] {
            continue;
        }
        blocked[u] = false;
        work.extend(std::mem::take(&mut blist[u]));
    }
}

/// Membership mask of the strongly connected component of `s` in the subgraph
/// induced on vertices `>= s`. Empty when `s` lies on no cycle there.
fn component_of(succ: &[Vec<usize>], s: usize) -> Vec<bool> {
    let n = succ.len();
    let mut fwd = vec![false; n];
    let mut work = vec![s];
    while let Some(v) = work.pop() {
        for &w in &succ[v] {
            if w >= s && !fwd[w] {
                fwd[w] = true;
                work.push(w);
            }
        }
    }
    if !fwd[s] {
        return vec![false; n];
    }
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in s..n {
        for &w in &succ[v] {
            if w >= s {
                pred[w].push(v);
            }
        }
    }
    let mut bwd = vec![false; n];
    bwd[s] = true;
    let mut work = vec![s];
    while let Some(v) = work.pop() {
        for &u in &pred[v] {
            if !bwd[u] {
                bwd[u] = true;
                work.push(u);
            }
        }
    }
    (0..n).map(|v| fwd[v] && bwd[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn states_of(cycles: &[SimpleCycle]) -> BTreeSet<Vec<usize>> {
        cycles.iter().map(|c| c.states().collect()).collect()
    }

    #[test]
    fn complete_digraph_on_three_vertices() {
        // Both orientations of every pair: three 2-cycles and two 3-cycles.
        let a = Automaton::from_named(
            &["x", "y"],
            3,
            0,
            [0],
            &[(0, "x", 1), (1, "x", 0), (1, "y", 2), (2, "x", 1), (0, "y", 2), (2, "y", 0)],
        )
        .unwrap();
        let cycles = simple_cycles(&a, 100).unwrap();
        let expected: BTreeSet<Vec<usize>> =
            [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2], vec![0, 2, 1]].into_iter().collect();
        assert_eq!(states_of(&cycles), expected);
        assert!(cycles.iter().all(|c| c.is_valid_in(&a)));
    }

    #[test]
    fn parallel_letters_expand() {
        let a = Automaton::from_named(&["s", "t"], 1, 0, [0], &[(0, "s", 0), (0, "t", 0)]).unwrap();
        let cycles = simple_cycles(&a, 100).unwrap();
        let words: Vec<Vec<usize>> = cycles.iter().map(|c| c.word().letters().to_vec()).collect();
        assert_eq!(words, vec![vec![0], vec![1]]);
        assert!(simple_cycles(&a, 1).is_err());
    }

    #[test]
    fn rotation_keeps_counts() {
        let c = SimpleCycle { arcs: vec![(0, 0), (3, 1), (5, 1)] };
        let r = c.rotated_to(5).unwrap();
        assert_eq!(r.base_state(), 5);
        assert_eq!(r.letter_counts(2), c.letter_counts(2));
        assert!(c.rotated_to(4).is_none());
    }
}
