//! Double description for `{x : A x <= 0}`.
//!
//! The lineality space `ker A` is split off first; the remaining cone lives in
//! the row space of `A`, where it is pointed. It starts as the simplicial cone
//! cut out by a maximal independent set of rows and is refined one inequality
//! at a time, combining adjacent ray pairs across each new hyperplane.
//! Adjacency is the combinatorial test on zero sets.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::caps::Caps;
use crate::error::Result;
use crate::field::rational::primitive_integer;
use crate::field::Rational;

pub(crate) type IntVec = Vec<BigInt>;

fn to_rat(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Reduced row echelon form; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Canonical integer basis of a subspace given by spanning vectors: the rows
/// of the reduced row echelon form, each scaled to a primitive integer vector.
pub(crate) fn canonical_basis(vectors: &[IntVec]) -> Vec<IntVec> {
    let mut m: Vec<Vec<Rational>> = vectors.iter().map(|v| to_rat(v)).collect();
    let rank = rref(&mut m).len();
    m.truncate(rank);
    m.iter().map(|row| primitive_integer(row)).collect()
}

/// Canonical integer basis of `{x : n.x = 0 for all rows n}`.
pub(crate) fn kernel_basis(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|v| to_rat(v)).collect();
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let raw: Vec<IntVec> = free
        .iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); dim];
            x[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -m[i][f].clone();
            }
            primitive_integer(&x)
        })
        .collect();
    canonical_basis(&raw)
}

/// Solves the square system `g y = rhs` exactly (g invertible).
fn solve(g: &[Vec<Rational>], rhs: &[Rational]) -> Vec<Rational> {
    let n = g.len();
    let mut aug: Vec<Vec<Rational>> = g
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    rref(&mut aug);
    (0..n).map(|i| aug[i][n].clone()).collect()
}

/// Output of [`extreme_rays_of`]: canonical lineality basis and sorted extreme rays.
pub(crate) struct RaysAndLineality {
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

#[derive(Clone)]
struct Ray {
    v: IntVec,
    zeros: Vec<bool>,
}

pub(crate) fn extreme_rays_of(normals: &[IntVec], dim: usize, max_rays: usize) -> Result<RaysAndLineality> {
    let lineality = kernel_basis(normals, dim);
    let rank = dim - lineality.len();
    if rank == 0 {
        return Ok(RaysAndLineality { lineality, rays: Vec::new() });
    }
    // Pick a maximal independent set of rows, in input order.
    let mut basis_rows: Vec<usize> = Vec::new();
    let mut span: Vec<Vec<Rational>> = Vec::new();
    for (i, n) in normals.iter().enumerate() {
        let mut trial = span.clone();
        trial.push(to_rat(n));
        if rref(&mut trial).len() > span.len() {
            span.push(to_rat(n));
            basis_rows.push(i);
            if basis_rows.len() == rank {
                break;
            }
        }
    }
    let m = normals.len();
    // Initial simplicial cone: x = B^T y with (B B^T) y = -e_i.
    let b: Vec<Vec<Rational>> = basis_rows.iter().map(|&i| to_rat(&normals[i])).collect();
    let gram: Vec<Vec<Rational>> = b
        .iter()
        .map(|r1| b.iter().map(|r2| r1.iter().zip(r2).map(|(x, y)| x * y).sum()).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut rhs = vec![Rational::zero(); rank];
        rhs[i] = -Rational::one();
        let y = solve(&gram, &rhs);
        let x: Vec<Rational> = (0..dim)
            .map(|c| (0..rank).map(|k| &y[k] * &b[k][c]).sum())
            .collect();
        let v = primitive_integer(&x);
        rays.push(Ray { zeros: vec![false; m], v });
    }
    let mut processed: Vec<usize> = basis_rows.clone();
    for ray in &mut rays {
        for &j in &processed {
            ray.zeros[j] = dot(&normals[j], &ray.v).is_zero();
        }
    }
    for j in 0..m {
        if basis_rows.contains(&j) {
            continue;
        }
        let a = &normals[j];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let (mut plus, mut minus) = (Vec::new(), Vec::new());
        for (idx, (r, val)) in rays.iter().zip(&values).enumerate() {
            if val.is_positive() {
                plus.push(idx);
            } else {
                let mut kept = r.clone();
                kept.zeros[j] = val.is_zero();
                next.push(kept);
                if val.is_negative() {
                    minus.push(idx);
                }
            }
        }
        for &p in &plus {
            for &q in &minus {
                if !adjacent(&rays, p, q, &processed, rank) {
                    continue;
                }
                let (vp, vq) = (&values[p], &values[q]);
                let combo: Vec<Rational> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xq, xp)| Rational::from_integer(vp * xq - vq * xp))
                    .collect();
                let v = primitive_integer(&combo);
                let mut zeros: Vec<bool> =
                    (0..m).map(|i| rays[p].zeros[i] && rays[q].zeros[i]).collect();
                zeros[j] = true;
                next.push(Ray { v, zeros });
                Caps::check(next.len(), max_rays, "double description rays")?;
            }
        }
        Caps::check(next.len(), max_rays, "double description rays")?;
        rays = next;
        processed.push(j);
    }
    let mut out: Vec<IntVec> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(RaysAndLineality { lineality, rays: out })
}

/// Two rays are adjacent when no third ray vanishes on every processed
/// constraint where both vanish. Sharing at least `rank - 2` zeros is a
/// necessary condition and is checked first.
fn adjacent(rays: &[Ray], p: usize, q: usize, processed: &[usize], rank: usize) -> bool {
    let common: Vec<usize> =
        processed.iter().copied().filter(|&i| rays[p].zeros[i] && rays[q].zeros[i]).collect();
    if common.len() + 2 < rank {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(r, ray)| r != p && r != q && common.iter().all(|&i| ray.zeros[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> IntVec {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_two_rows() {
        let k = kernel_basis(&[iv(&[1, 1, 1]), iv(&[2, 1, 1])], 3);
        assert_eq!(k, vec![iv(&[0, 1, -1])]);
        assert_eq!(kernel_basis(&[], 2), vec![iv(&[1, 0]), iv(&[0, 1])]);
    }

    #[test]
    fn orthant_rays() {
        let normals = [iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])];
        let out = extreme_rays_of(&normals, 3, 100).unwrap();
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays, vec![iv(&[-1, 0, 0]), iv(&[0, -1, 0]), iv(&[0, 0, -1])]);
    }

    #[test]
    fn square_pyramid() {
        // Pyramid over a square: x >= |y| and x >= |z|.
        let normals = [iv(&[-1, 1, 0]), iv(&[-1, -1, 0]), iv(&[-1, 0, 1]), iv(&[-1, 0, -1])];
        let out = extreme_rays_of(&normals, 3, 100).unwrap();
        assert_eq!(
            out.rays,
            vec![iv(&[1, -1, -1]), iv(&[1, -1, 1]), iv(&[1, 1, -1]), iv(&[1, 1, 1])]
        );
    }
}
