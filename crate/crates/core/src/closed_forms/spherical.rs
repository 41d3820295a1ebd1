use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::automaton::{sort_shortlex, Word};
use crate::caps::Caps;
use crate::coxeter::{families, CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::weight::WeightVector;

/// Bound of a weight function on a finite Coxeter group and its cell as
/// shortlex normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalFormulaResult {
    pub system: CoxeterSystem,
    pub bound: Rational,
    pub cell: Vec<Word>,
}

impl SphericalFormulaResult {
    pub fn formatted_cell(&self) -> Vec<String> {
        self.cell.iter().map(|w| self.system.alphabet().format(w)).collect()
    }
}

fn weight_of(sys: &CoxeterSystem, phi: &WeightVector, g: &GroupElement) -> Rational {
    phi.weight_of_word(&sys.lex_word(g))
}

fn normal_forms(sys: &CoxeterSystem, elements: impl IntoIterator<Item = GroupElement>) -> Vec<Word> {
    let set: HashSet<Word> = elements.into_iter().map(|g| sys.lex_word(&g)).collect();
    let mut out: Vec<Word> = set.into_iter().collect();
    sort_shortlex(&mut out);
    out
}

fn zero_generators(phi: &WeightVector) -> Vec<usize> {
    (0..phi.values().len()).filter(|&s| phi.value(s).is_zero()).collect()
}

/// Every weight nonnegative: the bound is `phi(w0)` and the cell is the coset `w0 W_0`,
/// where `W_0` is generated by the weight-zero generators.
pub fn spherical_nonneg(sys: &CoxeterSystem, phi: &WeightVector, caps: &Caps) -> Result<SphericalFormulaResult> {
    let phi = phi.reordered(sys.alphabet())?;
    if phi.values().iter().any(Signed::is_negative) {
        return Err(Error::Precondition("a generator has negative weight".into()));
    }
    let w0 = sys.longest_element()?;
    let zero = zero_generators(&phi);
    let coset = sys.parabolic_elements(&zero, caps)?.into_iter().map(|y| sys.multiply(&w0, &y));
    Ok(SphericalFormulaResult {
        system: sys.clone(),
        bound: weight_of(sys, &phi, &w0),
        cell: normal_forms(sys, coset),
    })
}

/// Every weight nonpositive: the bound is 0, attained exactly on `W_0`.
pub fn spherical_nonpos(sys: &CoxeterSystem, phi: &WeightVector, caps: &Caps) -> Result<SphericalFormulaResult> {
    let phi = phi.reordered(sys.alphabet())?;
    if phi.values().iter().any(Signed::is_positive) {
        return Err(Error::Precondition("a generator has positive weight".into()));
    }
    let zero = zero_generators(&phi);
    Ok(SphericalFormulaResult {
        system: sys.clone(),
        bound: Rational::zero(),
        cell: normal_forms(sys, sys.parabolic_elements(&zero, caps)?),
    })
}

/// Same-sign weights are settled by the two functions above; `None` when the signs are mixed.
fn same_sign(sys: &CoxeterSystem, phi: &WeightVector, caps: &Caps) -> Result<Option<SphericalFormulaResult>> {
    if phi.values().iter().all(|v| !v.is_negative()) {
        spherical_nonneg(sys, phi, caps).map(Some)
    } else if phi.values().iter().all(|v| !v.is_positive()) {
        spherical_nonpos(sys, phi, caps).map(Some)
    } else {
        Ok(None)
    }
}

fn word(sys: &CoxeterSystem, letters: &[&str]) -> Word {
    Word::new(letters.iter().map(|l| sys.alphabet().index(l).expect("known generator")).collect())
}

/// The dihedral group of order `4m` (bond label `2m`) with `phi(s) = a`, `phi(t) = b`.
pub fn dihedral_bound(m: u32, a: &Rational, b: &Rational) -> Result<SphericalFormulaResult> {
    if m == 0 {
        return Err(Error::Invalid("m must be at least 1".into()));
    }
    let sys = families::dihedral(2 * m)?;
    let phi = WeightVector::new(sys.alphabet().clone(), vec![a.clone(), b.clone()])?;
    let caps = Caps::default();
    if let Some(r) = same_sign(&sys, &phi, &caps)? {
        return Ok(r);
    }
    // Mixed signs: name the negative generator `neg` and the positive one `pos`.
    let (neg, pos, va, vb) = if a.is_negative() { ("s", "t", a, b) } else { ("t", "s", b, a) };
    let sum = va + vb;
    let mf = Rational::from_integer(m.into());
    let bound = if sum.is_positive() {
        (&mf - Rational::from_integer(1.into())) * va + &mf * vb
    } else {
        vb.clone()
    };
    let cell: Vec<GroupElement> = if sum.is_negative() {
        vec![sys.element_of_word(&word(&sys, &[pos]))]
    } else if sum.is_zero() {
        // pos (neg pos)^k for 0 <= k < m
        (0..m as usize)
            .map(|k| {
                let mut letters = vec![pos];
                for _ in 0..k {
                    letters.extend([neg, pos]);
                }
                sys.element_of_word(&word(&sys, &letters))
            })
            .collect()
    } else {
        let w0 = sys.longest_element()?;
        vec![sys.mul_right(&w0, sys.alphabet().index(neg)?)]
    };
    Ok(SphericalFormulaResult { bound, cell: normal_forms(&sys, cell), system: sys })
}

/// The linear forms whose maximum is the bound on `B_n` with `phi(s_1) = a`, `phi(s_n) = b`,
/// as pairs of coefficients `(of a, of b)`.
pub fn bn_forms(n: usize) -> Vec<(i64, i64)> {
    let n = n as i64;
    let mut out = Vec::new();
    for i in 0..=n {
        out.push((i * (i - 1) / 2, i));
        out.push((n * (n - 1) - (n - i) * (n - i - 1) / 2, i));
    }
    out
}

fn max_form(forms: &[(i64, i64)], a: &Rational, b: &Rational) -> Rational {
    forms
        .iter()
        .map(|&(x, y)| Rational::from_integer(x.into()) * a + Rational::from_integer(y.into()) * b)
        .max()
        .expect("nonempty")
}

fn argmax_cell(
    sys: &CoxeterSystem,
    phi: &WeightVector,
    bound: &Rational,
    candidates: Vec<GroupElement>,
) -> Result<Vec<Word>> {
    let cell: Vec<GroupElement> =
        candidates.into_iter().filter(|g| weight_of(sys, phi, g) == *bound).collect();
    if cell.is_empty() {
        return Err(Error::Precondition(
            "no candidate element attains the closed-form bound".into(),
        ));
    }
    Ok(normal_forms(sys, cell))
}

/// `B_n` with `phi(s_1) = ... = phi(s_{n-1}) = a` and `phi(s_n) = b`.
pub fn bn_bound(n: usize, a: &Rational, b: &Rational) -> Result<SphericalFormulaResult> {
    let sys = families::type_b(n)?;
    let mut values = vec![a.clone(); n];
    values[n - 1] = b.clone();
    let phi = WeightVector::new(sys.alphabet().clone(), values)?;
    let bound = max_form(&bn_forms(n), a, b);
    if a.is_zero() || b.is_zero() {
        let r = same_sign(&sys, &phi, &Caps::default())?.expect("a zero weight makes the signs agree");
        return Ok(SphericalFormulaResult { bound, ..r });
    }
    // x_i = prod_{j=1..i} (s_n s_{n-1} ... s_{n-i+j}),  y_i = w_J prod_{j=1..i} (s_n ... s_j).
    let descending = |from: usize, to: usize| -> Word { Word::new((to..=from).rev().map(|k| k - 1).collect()) };
    let j_set: Vec<usize> = (0..n - 1).collect();
    let w_j = sys.longest_element_of(&j_set)?;
    let mut candidates = Vec::new();
    for i in 0..=n {
        let mut x = Word::empty();
        let mut y = Word::empty();
        for j in 1..=i {
            x = x.concat(&descending(n, n - i + j));
            y = y.concat(&descending(n, j));
        }
        candidates.push(sys.element_of_word(&x));
        candidates.push(sys.multiply(&w_j, &sys.element_of_word(&y)));
    }
    let cell = argmax_cell(&sys, &phi, &bound, candidates)?;
    Ok(SphericalFormulaResult { system: sys, bound, cell })
}

/// The ten linear forms of the `F4` bound, as coefficients of `(a, b)`.
pub const F4_FORMS: [(i64, i64); 10] =
    [(0, 0), (3, 0), (0, 3), (5, 1), (1, 5), (11, 7), (7, 11), (12, 9), (9, 12), (12, 12)];

/// The eleven double coset representatives of the set `A`, as digit strings.
pub const F4_SET_A: [&str; 11] = [
    "121",
    "121321",
    "12132132",
    "1213214321",
    "121321432132",
    "121323432132",
    "121321324321",
    "12132132432132",
    "1213214321324321",
    "121321324321324321",
    "121321324321323432132",
];

/// `F4` with `phi(s_1) = phi(s_2) = a` and `phi(s_3) = phi(s_4) = b`.
pub fn f4_bound(a: &Rational, b: &Rational) -> Result<SphericalFormulaResult> {
    let sys = families::f4()?;
    let phi = WeightVector::new(sys.alphabet().clone(), vec![a.clone(), a.clone(), b.clone(), b.clone()])?;
    let bound = max_form(&F4_FORMS, a, b);
    if a.is_zero() || b.is_zero() {
        let r = same_sign(&sys, &phi, &Caps::default())?.expect("a zero weight makes the signs agree");
        return Ok(SphericalFormulaResult { bound, ..r });
    }
    let digit = |c: char| c.to_digit(10).expect("digit") as usize - 1;
    let mut candidates = vec![sys.identity(), sys.longest_element()?];
    for text in F4_SET_A {
        let w = Word::new(text.chars().map(digit).collect());
        // The diagram automorphism swaps 1 with 4 and 2 with 3.
        let sigma = Word::new(w.letters().iter().map(|&s| 3 - s).collect());
        candidates.push(sys.element_of_word(&w));
        candidates.push(sys.element_of_word(&sigma));
    }
    let cell = argmax_cell(&sys, &phi, &bound, candidates)?;
    Ok(SphericalFormulaResult { system: sys, bound, cell })
}

/// The exact maximum of `phi` over a finite group and the elements attaining it.
pub fn exhaustive_cell(sys: &CoxeterSystem, phi: &WeightVector, caps: &Caps) -> Result<(Rational, Vec<Word>)> {
    let phi = phi.reordered(sys.alphabet())?;
    let all = sys.all_elements(caps)?;
    let weights: Vec<Rational> = all.iter().map(|(_, w)| phi.weight_of_word(w)).collect();
    let bound = weights.iter().max().expect("identity").clone();
    let cell = all.into_iter().zip(&weights).filter(|(_, v)| **v == bound).map(|((_, w), _)| w).collect();
    Ok((bound, cell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn shown(r: &SphericalFormulaResult) -> Vec<String> {
        r.formatted_cell()
    }

    #[test]
    fn dihedral_cases() {
        let r = dihedral_bound(3, &int(-1), &int(1)).unwrap();
        assert_eq!(r.bound, int(1));
        assert_eq!(shown(&r), ["t", "tst", "tstst"]);
        let r = dihedral_bound(2, &int(-2), &int(1)).unwrap();
        assert_eq!((r.bound.clone(), shown(&r)), (int(1), vec!["t".to_string()]));
        let r = dihedral_bound(4, &int(-1), &int(2)).unwrap();
        assert_eq!(r.bound, int(5));
        assert_eq!(shown(&r), ["tststst"]);
        let r = dihedral_bound(2, &int(1), &int(0)).unwrap();
        assert_eq!(r.bound, int(2));
        assert_eq!(shown(&r).len(), 2);
    }

    #[test]
    fn same_sign_weights() {
        let caps = Caps::default();
        let b2 = families::type_b(2).unwrap();
        let phi = WeightVector::from_ints(b2.alphabet(), &[1, 1]).unwrap();
        let r = spherical_nonneg(&b2, &phi, &caps).unwrap();
        assert_eq!((r.bound.clone(), shown(&r)), (int(4), vec!["1212".to_string()]));
        let phi = WeightVector::from_ints(b2.alphabet(), &[1, 0]).unwrap();
        assert_eq!(spherical_nonneg(&b2, &phi, &caps).unwrap().cell.len(), 2);
        let a2 = families::type_a(2).unwrap();
        let phi = WeightVector::from_ints(a2.alphabet(), &[1, 1]).unwrap();
        assert_eq!(spherical_nonneg(&a2, &phi, &caps).unwrap().bound, int(3));
        let phi = WeightVector::from_ints(a2.alphabet(), &[1, -1]).unwrap();
        assert!(spherical_nonneg(&a2, &phi, &caps).is_err());
        let inf = families::dihedral(0).unwrap();
        let phi = WeightVector::from_ints(inf.alphabet(), &[1, 1]).unwrap();
        assert!(spherical_nonneg(&inf, &phi, &caps).is_err());
    }

    #[test]
    fn bn_small() {
        assert_eq!(bn_bound(2, &int(1), &int(-1)).unwrap().bound, int(1));
        assert_eq!(bn_bound(3, &int(0), &int(0)).unwrap().bound, int(0));
        let forms: Vec<i64> = bn_forms(2).iter().map(|&(x, y)| x - y).collect();
        assert_eq!(forms, [0, 1, -1, 1, -1, 0]);
    }

    #[test]
    fn f4_values() {
        assert_eq!(f4_bound(&int(1), &int(-1)).unwrap().bound, int(4));
        assert_eq!(f4_bound(&int(-1), &int(1)).unwrap().bound, int(4));
        assert_eq!(f4_bound(&int(1), &int(1)).unwrap().bound, int(24));
    }
}
