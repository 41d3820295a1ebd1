//! The real cyclotomic field `Q(2cos(pi/M))`.
//!
//! Elements are stored in the power basis of `x = 2cos(pi/M)` reduced modulo
//! the minimal polynomial of `x`. Because that polynomial is irreducible the
//! representation is faithful: an element is zero exactly when all of its
//! coefficients are zero. Signs of nonzero elements are decided by evaluating
//! over a rational isolating interval for `x` and bisecting until the
//! resulting interval excludes zero.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{to_f64, Rational};
use crate::error::{Error, Result};

/// Largest modulus accepted; keeps the floating-point seed of the isolating
/// interval well inside the root separation.
pub const MAX_MODULUS: u64 = 10_000;

type IntPoly = Vec<BigInt>;

fn trim_poly(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division by a monic polynomial; panics if the division is not exact.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let mut rem: IntPoly = num.to_vec();
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    if rem.len() <= dn {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    trim_poly(&mut quot);
    quot
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The cyclotomic polynomial `Phi_n`, coefficients from low to high degree.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut table: Vec<(u64, IntPoly)> = Vec::new();
    for d in divisors(n) {
        // x^d - 1 divided by Phi_e for every proper divisor e of d.
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = BigInt::from(-1);
        p[d as usize] = BigInt::one();
        for (e, phi) in &table {
            if d % e == 0 {
                p = poly_div_exact(&p, phi);
            }
        }
        table.push((d, p));
    }
    table.pop().expect("n has at least one divisor").1
}

/// Monic minimal polynomial of `2cos(pi/M)` over the rationals, low to high.
///
/// Obtained from `Phi_{2M}` by the substitution `y = z + 1/z`, which maps a
/// palindromic polynomial of degree `2k` to a polynomial of degree `k`.
pub fn minimal_polynomial_of_2cos(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        // 2cos(pi) = -2
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = cyclotomic_polynomial(2 * m);
    let k = (phi.len() - 1) / 2;
    // chebyshev[j] is the integer polynomial with T_j(z + 1/z) = z^j + z^-j.
    let mut chebyshev: Vec<IntPoly> = vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]];
    while chebyshev.len() <= k {
        let j = chebyshev.len();
        let mut next = vec![BigInt::zero(); j + 1];
        for (i, c) in chebyshev[j - 1].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in chebyshev[j - 2].iter().enumerate() {
            next[i] -= c;
        }
        chebyshev.push(next);
    }
    let mut out = vec![BigInt::zero(); k + 1];
    out[0] += &phi[k];
    for j in 1..=k {
        let c = &phi[k + j];
        for (i, t) in chebyshev[j].iter().enumerate() {
            out[i] += c * t;
        }
    }
    trim_poly(&mut out);
    out
}

fn eval_int_poly(p: &[BigInt], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

/// A closed rational interval.
#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn point(v: Rational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    fn add_scalar(&self, c: &Rational) -> Interval {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }
}

/// The field `Q(2cos(pi/M))` together with an isolating interval for its generator.
#[derive(Debug)]
pub struct CycloField {
    modulus: u64,
    minpoly: Vec<BigInt>,
    root: Interval,
}

impl CycloField {
    pub fn new(modulus: u64) -> Result<Arc<Self>> {
        if modulus == 0 || modulus > MAX_MODULUS {
            return Err(Error::Invalid(format!(
                "field modulus {modulus} outside 1..={MAX_MODULUS}"
            )));
        }
        let minpoly = minimal_polynomial_of_2cos(modulus);
        let approx = 2.0 * (std::f64::consts::PI / modulus as f64).cos();
        let delta = 1e-9;
        let lo = Rational::from_float(approx - delta).expect("finite");
        let hi = Rational::from_float(approx + delta).expect("finite");
        let (flo, fhi) = (eval_int_poly(&minpoly, &lo), eval_int_poly(&minpoly, &hi));
        assert!(
            flo.signum() * fhi.signum() <= Rational::zero(),
            "seed interval does not bracket 2cos(pi/{modulus})"
        );
        let mut field = CycloField { modulus, minpoly, root: Interval { lo, hi } };
        // Pre-refine so that most sign queries succeed on the first evaluation.
        for _ in 0..40 {
            if !field.bisect_root() {
                break;
            }
        }
        Ok(Arc::new(field))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.minpoly
    }

    /// Halves the isolating interval; returns false once the root is known exactly.
    fn bisect_root(&mut self) -> bool {
        Self::bisect(&self.minpoly, &mut self.root)
    }

    fn bisect(minpoly: &[BigInt], root: &mut Interval) -> bool {
        if root.lo == root.hi {
            return false;
        }
        let mid = (&root.lo + &root.hi) / Rational::from_integer(BigInt::from(2));
        let fmid = eval_int_poly(minpoly, &mid);
        if fmid.is_zero() {
            *root = Interval::point(mid);
            return false;
        }
        let flo = eval_int_poly(minpoly, &root.lo);
        if flo.is_zero() {
            *root = Interval::point(root.lo.clone());
            return false;
        }
        if flo.signum() == fmid.signum() {
            root.lo = mid;
        } else {
            root.hi = mid;
        }
        true
    }

    fn eval_interval(coeffs: &[Rational], x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    /// Exact sign of the element with the given power-basis coefficients.
    fn sign_of(&self, coeffs: &[Rational]) -> i32 {
        if coeffs.iter().all(Zero::is_zero) {
            return 0;
        }
        if let Some(sign) = self.float_sign(coeffs) {
            return sign;
        }
        let mut root = self.root.clone();
        loop {
            let value = Self::eval_interval(coeffs, &root);
            if value.lo > Rational::zero() {
                return 1;
            }
            if value.hi < Rational::zero() {
                return -1;
            }
            if !Self::bisect(&self.minpoly, &mut root) {
                // The generator is rational here; evaluate exactly.
                let v = Self::eval_interval(coeffs, &root).lo;
                return if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
            }
        }
    }

    /// Sign from a floating-point evaluation, when the value clears a margin
    /// far above the accumulated rounding error of Horner's rule and of the
    /// float root. `None` sends the caller to exact refinement.
    fn float_sign(&self, coeffs: &[Rational]) -> Option<i32> {
        let x = 2.0 * (std::f64::consts::PI / self.modulus as f64).cos();
        let (mut value, mut magnitude) = (0.0f64, 0.0f64);
        for c in coeffs.iter().rev() {
            let c = to_f64(c);
            value = value * x + c;
            magnitude = magnitude * x.abs() + c.abs();
        }
        if !value.is_finite() || !magnitude.is_finite() || magnitude < 1e-250 {
            return None;
        }
        let margin = (coeffs.len() as f64 + 1.0) * 1e-13 * magnitude;
        (value.abs() > margin).then_some(if value > 0.0 { 1 } else { -1 })
    }

    /// Reduces a coefficient vector of arbitrary length modulo the minimal polynomial.
    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        while coeffs.len() > d {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - d;
            for (i, m) in self.minpoly[..d].iter().enumerate() {
                coeffs[shift + i] -= &top * Rational::from_integer(m.clone());
            }
        }
        coeffs.resize(d, Rational::zero());
        coeffs
    }
}

/// Element of `Q(2cos(pi/M))`.
#[derive(Clone)]
pub struct CycloReal {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl CycloReal {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloReal { field: field.clone(), coeffs: vec![Rational::zero(); field.degree()] }
    }

    pub fn from_rational(field: &Arc<CycloField>, value: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = value;
        CycloReal { field: field.clone(), coeffs }
    }

    pub fn from_int(field: &Arc<CycloField>, value: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(value)))
    }

    /// The generator `2cos(pi/M)`.
    pub fn generator(field: &Arc<CycloField>) -> Self {
        let coeffs = field.reduce(vec![Rational::zero(), Rational::one()]);
        CycloReal { field: field.clone(), coeffs }
    }

    /// Builds an element from power-basis coefficients (reduced if too long).
    pub fn from_coeffs(field: &Arc<CycloField>, coeffs: Vec<Rational>) -> Self {
        CycloReal { field: field.clone(), coeffs: field.reduce(coeffs) }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Exact sign under the real embedding: -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else if r.is_negative() { -1 } else { 0 };
        }
        self.field.sign_of(&self.coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        CycloReal {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Approximate real value, for display only.
    pub fn approx(&self) -> f64 {
        let x = 2.0 * (std::f64::consts::PI / self.field.modulus as f64).cos();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.modulus, other.field.modulus,
            "mixing elements of different cyclotomic fields"
        );
    }
}

/// `2cos(pi/m)` inside `Q(2cos(pi/M))`, via `2cos(k t) = T_k(2cos t)` with `k = M/m`.
pub fn embed_2cos(m: u64, field: &Arc<CycloField>) -> Result<CycloReal> {
    let modulus = field.modulus();
    if m < 2 || modulus % m != 0 {
        return Err(Error::Invalid(format!(
            "bond label {m} does not divide field modulus {modulus}"
        )));
    }
    let k = modulus / m;
    let x = CycloReal::generator(field);
    let mut prev = CycloReal::from_int(field, 2);
    let mut cur = x.clone();
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

impl PartialEq for CycloReal {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus == other.field.modulus && self.coeffs == other.coeffs
    }
}

impl Eq for CycloReal {}

impl Hash for CycloReal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.modulus.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloReal({self} ~ {:.6})", self.approx())
    }
}

impl fmt::Display for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &CycloReal {
    type Output = CycloReal;
    fn add(self, rhs: &CycloReal) -> CycloReal {
        self.check_same_field(rhs);
        CycloReal {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloReal {
    type Output = CycloReal;
    fn sub(self, rhs: &CycloReal) -> CycloReal {
        self.check_same_field(rhs);
        CycloReal {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CycloReal {
    type Output = CycloReal;
    fn mul(self, rhs: &CycloReal) -> CycloReal {
        self.check_same_field(rhs);
        let d = self.coeffs.len();
        if d == 1 {
            return CycloReal {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut out = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        CycloReal { field: self.field.clone(), coeffs: self.field.reduce(out) }
    }
}

impl Neg for &CycloReal {
    type Output = CycloReal;
    fn neg(self) -> CycloReal {
        CycloReal { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for CycloReal {
    type Output = CycloReal;
    fn add(self, rhs: CycloReal) -> CycloReal {
        &self + &rhs
    }
}

impl Sub for CycloReal {
    type Output = CycloReal;
    fn sub(self, rhs: CycloReal) -> CycloReal {
        &self - &rhs
    }
}

impl Mul for CycloReal {
    type Output = CycloReal;
    fn mul(self, rhs: CycloReal) -> CycloReal {
        &self * &rhs
    }
}

impl Neg for CycloReal {
    type Output = CycloReal;
    fn neg(self) -> CycloReal {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational::{int, ratio};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn minimal_polynomials_of_small_moduli() {
        assert_eq!(minimal_polynomial_of_2cos(1), ints(&[2, 1]));
        assert_eq!(minimal_polynomial_of_2cos(2), ints(&[0, 1]));
        assert_eq!(minimal_polynomial_of_2cos(3), ints(&[-1, 1]));
        assert_eq!(minimal_polynomial_of_2cos(4), ints(&[-2, 0, 1]));
        assert_eq!(minimal_polynomial_of_2cos(6), ints(&[-3, 0, 1]));
    }

    #[test]
    fn sqrt3_is_irreducible_and_a_root() {
        // x^2 - 3: no rational roots among the divisors of 3, degree 2.
        let p = minimal_polynomial_of_2cos(6);
        for cand in [1i64, -1, 3, -3] {
            assert!(!eval_int_poly(&p, &int(cand)).is_zero());
        }
        let x = 2.0 * (std::f64::consts::PI / 6.0).cos();
        let v: f64 = p.iter().rev().fold(0.0, |acc, c| acc * x + c.to_string().parse::<f64>().unwrap());
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn degree_matches_totient() {
        fn totient(n: u64) -> u64 {
            (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64
        }
        for m in 2..=30u64 {
            assert_eq!(minimal_polynomial_of_2cos(m).len() as u64 - 1, totient(2 * m) / 2, "M={m}");
        }
    }

    #[test]
    fn embedding_examples() {
        let f = CycloField::new(6).unwrap();
        let g = embed_2cos(6, &f).unwrap();
        assert_eq!(g, CycloReal::generator(&f));
        assert!(embed_2cos(2, &f).unwrap().is_zero());
        let one = embed_2cos(3, &f).unwrap();
        assert_eq!(one, CycloReal::from_int(&f, 1));
        assert_eq!(&one * &one, CycloReal::from_int(&f, 1));
        assert!(embed_2cos(4, &f).is_err());
        assert!(embed_2cos(1, &f).is_err());
    }

    #[test]
    fn signs() {
        let f = CycloField::new(6).unwrap();
        assert_eq!(CycloReal::zero(&f).sign(), 0);
        let one = CycloReal::from_int(&f, 1);
        assert_eq!((&embed_2cos(3, &f).unwrap() - &one).sign(), 0);
        assert_eq!((&embed_2cos(6, &f).unwrap() - &one).sign(), 1);
        // sqrt(3) - 1732/1000 > 0 > sqrt(3) - 1733/1000
        let x = CycloReal::generator(&f);
        assert_eq!((&x - &CycloReal::from_rational(&f, ratio(1732, 1000))).sign(), 1);
        assert_eq!((&x - &CycloReal::from_rational(&f, ratio(1733, 1000))).sign(), -1);
    }

    #[test]
    fn modulus_one_and_two() {
        let f1 = CycloField::new(1).unwrap();
        assert_eq!(CycloReal::generator(&f1), CycloReal::from_int(&f1, -2));
        let f2 = CycloField::new(2).unwrap();
        assert!(CycloReal::generator(&f2).is_zero());
    }
}
