use std::collections::{HashMap, VecDeque};

use super::CoxeterSystem;
use crate::caps::Caps;
use crate::error::Result;
use crate::field::CycloReal;

/// What a simple reflection does to a minimal root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootAction {
    /// The root is `alpha_s` itself, sent to its negative.
    Descent,
    /// The reflection fixes the root.
    Fixed,
    /// The image is the minimal root with this index.
    Minimal(usize),
    /// The image is positive but not minimal.
    NonMinimal,
}

/// Minimal roots in simple-root coordinates (the first `rank` entries are the
/// simple roots) and the action of every generator on them.
#[derive(Debug, Clone)]
pub struct MinimalRootTable {
    pub roots: Vec<Vec<CycloReal>>,
    /// `action[s][root]`.
    pub action: Vec<Vec<RootAction>>,
}

impl MinimalRootTable {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Breadth-first closure of the simple roots under the reflections that keep
/// the value `c = B(alpha_s, gamma)` strictly between `-1` and `1`.
pub fn minimal_roots(sys: &CoxeterSystem, caps: &Caps) -> Result<MinimalRootTable> {
    let n = sys.rank();
    let field = sys.field();
    let two = CycloReal::from_int(field, 2);
    let minus_two = CycloReal::from_int(field, -2);
    let mut roots: Vec<Vec<CycloReal>> = (0..n)
        .map(|s| {
            let mut v = vec![CycloReal::zero(field); n];
            v[s] = CycloReal::from_int(field, 1);
            v
        })
        .collect();
    let mut index: HashMap<Vec<CycloReal>, usize> =
        roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut action: Vec<Vec<RootAction>> = vec![Vec::new(); n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(i) = queue.pop_front() {
        for s in 0..n {
            let act = if i == s {
                RootAction::Descent
            } else {
                let gamma = &roots[i];
                let mut c2 = CycloReal::zero(field);
                for (t, g) in gamma.iter().enumerate() {
                    let f = sys.form2(s, t);
                    if !f.is_zero() && !g.is_zero() {
                        c2 = &c2 + &(f * g);
                    }
                }
                if c2.is_zero() {
                    RootAction::Fixed
                } else if (&c2 - &two).sign() < 0 && (&c2 - &minus_two).sign() > 0 {
                    let mut image = gamma.clone();
                    image[s] = &image[s] - &c2;
                    let j = match index.get(&image) {
                        Some(&j) => j,
                        None => {
                            let j = roots.len();
                            index.insert(image.clone(), j);
                            roots.push(image);
                            queue.push_back(j);
                            Caps::check(roots.len(), caps.roots, "minimal roots")?;
                            j
                        }
                    };
                    RootAction::Minimal(j)
                } else {
                    RootAction::NonMinimal
                }
            };
            if action[s].len() <= i {
                action[s].resize(i + 1, RootAction::NonMinimal);
            }
            action[s][i] = act;
        }
    }
    Ok(MinimalRootTable { roots, action })
}
