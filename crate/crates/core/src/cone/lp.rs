//! Dense exact simplex for `max c.x` subject to `A x <= b` with `b >= 0`.
//!
//! Because the right-hand side is nonnegative the origin is feasible and the
//! slack basis is a starting vertex, so no first phase is needed. Bland's rule
//! picks entering and leaving variables, which rules out cycling.

use num_traits::{Signed, Zero};

use crate::field::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(Rational),
    Unbounded,
}

/// Maximizes `c.x` over free variables `x` with `a[i].x <= b[i]`.
///
/// Panics if some `b[i]` is negative or the row lengths disagree with `c`.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let d = c.len();
    let m = a.len();
    assert_eq!(m, b.len());
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand side must be nonnegative");
    // Columns: x+ (d), x- (d), slacks (m), then the right-hand side.
    let cols = 2 * d + m;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), d);
        let mut r = vec![Rational::zero(); cols + 1];
        for j in 0..d {
            r[j] = row[j].clone();
            r[d + j] = -row[j].clone();
        }
        r[2 * d + i] = Rational::from_integer(1.into());
        r[cols] = b[i].clone();
        t.push(r);
    }
    // Reduced costs; a positive entry may enter the basis.
    let mut obj = vec![Rational::zero(); cols + 1];
    for j in 0..d {
        obj[j] = c[j].clone();
        obj[d + j] = -c[j].clone();
    }
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * d + i).collect();
    loop {
        let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) else {
            return LpOutcome::Optimal(-obj[cols].clone());
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return LpOutcome::Unbounded;
        };
        pivot(&mut t, &mut obj, row, enter);
        basis[row] = enter;
    }
}

fn pivot(t: &mut [Vec<Rational>], obj: &mut [Rational], row: usize, col: usize) {
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v = &*v / &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for (v, pv) in obj.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
