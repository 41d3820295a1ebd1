use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use super::CoxeterSystem;
use crate::automaton::Word;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::CycloReal;

/// A group element as its matrix on the simple-root basis, with the inverse
/// kept alongside so that left and right descents are both column tests.
#[derive(Clone)]
pub struct GroupElement {
    n: usize,
    /// Row-major; column `s` is the image of `alpha_s`.
    mat: Vec<CycloReal>,
    inv: Vec<CycloReal>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl std::fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        f.debug_tuple("GroupElement").field(&rows).finish()
    }
}

impl GroupElement {
    pub fn entry(&self, row: usize, col: usize) -> &CycloReal {
        &self.mat[row * self.n + col]
    }

    /// The image of `alpha_s`, in simple-root coordinates.
    pub fn column(&self, s: usize) -> Vec<CycloReal> {
        (0..self.n).map(|i| self.mat[i * self.n + s].clone()).collect()
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { n: self.n, mat: self.inv.clone(), inv: self.mat.clone() }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    e.as_rational().is_some_and(|r| *r == num_traits::One::one())
                } else {
                    e.is_zero()
                }
            })
        })
    }
}

/// Sign of a root vector, read from its first nonzero coordinate.
fn column_is_negative(mat: &[CycloReal], n: usize, col: usize) -> bool {
    (0..n)
        .map(|i| &mat[i * n + col])
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.sign() < 0)
}

/// `M <- M * s`: column `s` is negated and `col_t -= form2[s][t] * col_s`.
fn right_mul(sys: &CoxeterSystem, mat: &mut [CycloReal], n: usize, s: usize) {
    let col_s: Vec<CycloReal> = (0..n).map(|i| mat[i * n + s].clone()).collect();
    for t in 0..n {
        if t == s {
            for (i, v) in col_s.iter().enumerate() {
                mat[i * n + s] = -v;
            }
            continue;
        }
        let f = sys.form2(s, t);
        if f.is_zero() {
            continue;
        }
        for (i, v) in col_s.iter().enumerate() {
            let updated = &mat[i * n + t] - &(f * v);
            mat[i * n + t] = updated;
        }
    }
}

/// `M <- s * M`: row `s` becomes `-row_s - sum_{t != s} form2[s][t] row_t`.
fn left_mul(sys: &CoxeterSystem, mat: &mut [CycloReal], n: usize, s: usize) {
    for j in 0..n {
        let mut acc = -&mat[s * n + j];
        for t in 0..n {
            if t == s {
                continue;
            }
            let f = sys.form2(s, t);
            if !f.is_zero() {
                acc = &acc - &(f * &mat[t * n + j]);
            }
        }
        mat[s * n + j] = acc;
    }
}

impl CoxeterSystem {
    pub fn identity(&self) -> GroupElement {
        let n = self.rank();
        let field = self.field();
        let mut mat = vec![CycloReal::zero(field); n * n];
        for i in 0..n {
            mat[i * n + i] = CycloReal::from_int(field, 1);
        }
        GroupElement { n, inv: mat.clone(), mat }
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        self.mul_right(&self.identity(), s)
    }

    /// `g s`.
    pub fn mul_right(&self, g: &GroupElement, s: usize) -> GroupElement {
        let mut out = g.clone();
        right_mul(self, &mut out.mat, g.n, s);
        left_mul(self, &mut out.inv, g.n, s);
        out
    }

    /// `s g`.
    pub fn mul_left(&self, s: usize, g: &GroupElement) -> GroupElement {
        let mut out = g.clone();
        left_mul(self, &mut out.mat, g.n, s);
        right_mul(self, &mut out.inv, g.n, s);
        out
    }

    /// The image of a word under the natural map to the group.
    pub fn element_of_word(&self, word: &Word) -> GroupElement {
        word.letters().iter().fold(self.identity(), |g, &s| self.mul_right(&g, s))
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let n = g.n;
        let prod = |a: &[CycloReal], b: &[CycloReal]| -> Vec<CycloReal> {
            let mut out = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = CycloReal::zero(self.field());
                    for k in 0..n {
                        let (x, y) = (&a[i * n + k], &b[k * n + j]);
                        if !x.is_zero() && !y.is_zero() {
                            acc = &acc + &(x * y);
                        }
                    }
                    out.push(acc);
                }
            }
            out
        };
        GroupElement { n, mat: prod(&g.mat, &h.mat), inv: prod(&h.inv, &g.inv) }
    }

    /// `l(g s) < l(g)`, i.e. `g alpha_s` is negative.
    pub fn is_right_descent(&self, g: &GroupElement, s: usize) -> bool {
        column_is_negative(&g.mat, g.n, s)
    }

    /// `l(s g) < l(g)`, i.e. `g^{-1} alpha_s` is negative.
    pub fn is_left_descent(&self, g: &GroupElement, s: usize) -> bool {
        column_is_negative(&g.inv, g.n, s)
    }

    pub fn left_descents(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_left_descent(g, s)).collect()
    }

    pub fn right_descents(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_right_descent(g, s)).collect()
    }

    /// The shortlex-least reduced word, by repeatedly stripping the least left descent.
    pub fn lex_word(&self, g: &GroupElement) -> Word {
        let mut word = Word::empty();
        let mut cur = g.clone();
        while let Some(s) = (0..self.rank()).find(|&s| self.is_left_descent(&cur, s)) {
            word.push(s);
            cur = self.mul_left(s, &cur);
        }
        word
    }

    pub fn length(&self, g: &GroupElement) -> usize {
        self.lex_word(g).len()
    }

    /// Every element of length at most `radius` with its shortlex normal form,
    /// in shortlex order of the normal forms.
    pub fn ball(&self, radius: usize, caps: &Caps) -> Result<Vec<(GroupElement, Word)>> {
        let mut out = vec![(self.identity(), Word::empty())];
        let mut seen: HashSet<GroupElement> = HashSet::new();
        seen.insert(self.identity());
        let mut layer_start = 0;
        for _ in 0..radius {
            let layer_end = out.len();
            for idx in layer_start..layer_end {
                for s in 0..self.rank() {
                    let (g, w) = &out[idx];
                    if self.is_right_descent(g, s) {
                        continue;
                    }
                    let h = self.mul_right(g, s);
                    if seen.contains(&h) {
                        continue;
                    }
                    let mut word = w.clone();
                    word.push(s);
                    seen.insert(h.clone());
                    out.push((h, word));
                    Caps::check(out.len(), caps.elements, "group elements")?;
                }
            }
            if out.len() == layer_end {
                break;
            }
            layer_start = layer_end;
        }
        Ok(out)
    }

    /// All elements of a finite group.
    pub fn all_elements(&self, caps: &Caps) -> Result<Vec<(GroupElement, Word)>> {
        if !self.is_finite() {
            return Err(Error::Precondition("the Coxeter group is infinite".into()));
        }
        self.ball(usize::MAX, caps)
    }

    /// Elements of the standard parabolic subgroup generated by `subset`.
    pub fn parabolic_elements(&self, subset: &[usize], caps: &Caps) -> Result<Vec<GroupElement>> {
        if !self.is_finite_parabolic(subset) {
            return Err(Error::Precondition("the parabolic subgroup is infinite".into()));
        }
        let mut out = vec![self.identity()];
        let mut index: HashMap<GroupElement, usize> = HashMap::new();
        index.insert(self.identity(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &s in subset {
                let h = self.mul_right(&out[i], s);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), out.len());
                    queue.push_back(out.len());
                    out.push(h);
                    Caps::check(out.len(), caps.elements, "group elements")?;
                }
            }
        }
        Ok(out)
    }

    /// The longest element of a finite group (or of a finite parabolic subgroup).
    pub fn longest_element_of(&self, subset: &[usize]) -> Result<GroupElement> {
        if !self.is_finite_parabolic(subset) {
            return Err(Error::Precondition("no longest element: the group is infinite".into()));
        }
        let mut g = self.identity();
        while let Some(&s) = subset.iter().find(|&&s| !self.is_right_descent(&g, s)) {
            g = self.mul_right(&g, s);
        }
        Ok(g)
    }

    pub fn longest_element(&self) -> Result<GroupElement> {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.longest_element_of(&all)
    }
}
