//! Rational polyhedral cones `{x : <n, x> <= 0 for every normal n}`.
//!
//! Normals and rays are primitive integer vectors. [`remove_redundant`] uses an
//! exact simplex; [`extreme_rays`] and [`facets_from_vrep`] run the double
//! description method on the cone and on its polar.

mod dd;
pub mod lp;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::rational::primitive_integer;
use crate::field::Rational;
use lp::{maximize, LpOutcome};

pub type IntVec = Vec<BigInt>;

/// Converts small integers into an [`IntVec`].
pub fn int_vec(values: &[i64]) -> IntVec {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn primitive_of_ints(v: &[BigInt]) -> IntVec {
    let as_rat: Vec<Rational> = v.iter().map(|x| Rational::from_integer(x.clone())).collect();
    primitive_integer(&as_rat)
}

fn dot_rat(n: &[BigInt], x: &[Rational]) -> Rational {
    n.iter().zip(x).map(|(a, b)| Rational::from_integer(a.clone()) * b).sum()
}

/// Inequality description `<n, x> <= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    dim: usize,
    normals: Vec<IntVec>,
}

impl HRep {
    /// Normalizes each vector to a primitive integer vector, drops zero rows
    /// and repeats (keeping first occurrences).
    pub fn new(dim: usize, normals: Vec<IntVec>) -> Result<HRep> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for n in normals {
            if n.len() != dim {
                return Err(Error::Invalid(format!(
                    "normal of length {} in a cone of dimension {dim}",
                    n.len()
                )));
            }
            if n.iter().all(Zero::is_zero) {
                continue;
            }
            let p = primitive_of_ints(&n);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        Ok(HRep { dim, normals: out })
    }

    pub fn from_ints(dim: usize, normals: &[Vec<i64>]) -> Result<HRep> {
        HRep::new(dim, normals.iter().map(|n| int_vec(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[IntVec] {
        &self.normals
    }

    /// The normals as a set, for order-insensitive comparison.
    pub fn normal_set(&self) -> BTreeSet<IntVec> {
        self.normals.iter().cloned().collect()
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.dim {
            return Err(Error::Invalid(format!(
                "vector of length {len} against a cone of dimension {}",
                self.dim
            )));
        }
        Ok(())
    }

    /// Every inequality holds.
    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.normals.iter().all(|n| !dot_rat(n, x).is_positive()))
    }

    /// Every inequality holds strictly.
    pub fn interior(&self, x: &[Rational]) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.normals.iter().all(|n| dot_rat(n, x).is_negative()))
    }

    /// Whether `<n, x> <= 0` follows from the inequalities of `self`.
    pub fn implies(&self, n: &[BigInt]) -> Result<bool> {
        self.check_dim(n.len())?;
        Ok(implied_by(n, &self.normals))
    }

    /// Both cones are equal, decided by mutual implication of the inequalities.
    pub fn same_cone(&self, other: &HRep) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::Invalid("cones of different dimensions".into()));
        }
        for n in &other.normals {
            if !self.implies(n)? {
                return Ok(false);
            }
        }
        for n in &self.normals {
            if !other.implies(n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        json!({ "dim": self.dim, "normals": ints_json(&self.normals) })
    }
}

/// Generator description: `cone(rays) + span(lineality)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    /// Canonical basis: reduced row echelon rows scaled to primitive integers.
    pub lineality: Vec<IntVec>,
    /// Extreme rays of the pointed part, which lies in the orthogonal
    /// complement of the lineality space; sorted lexicographically.
    pub rays: Vec<IntVec>,
}

impl VRep {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "lineality": ints_json(&self.lineality),
            "rays": ints_json(&self.rays),
        })
    }

    /// `sum c_i r_i + sum d_j l_j` for the given coefficients.
    pub fn combine(&self, ray_coeffs: &[Rational], lin_coeffs: &[Rational]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.dim];
        for (c, r) in ray_coeffs.iter().zip(&self.rays) {
            for (xi, ri) in x.iter_mut().zip(r) {
                *xi += c * Rational::from_integer(ri.clone());
            }
        }
        for (c, l) in lin_coeffs.iter().zip(&self.lineality) {
            for (xi, li) in x.iter_mut().zip(l) {
                *xi += c * Rational::from_integer(li.clone());
            }
        }
        x
    }
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn ints_json(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(int_json).collect())).collect())
}

/// Full cone document `{"dim","normals","lineality","rays"}`.
pub fn cone_json(h: &HRep, v: &VRep) -> Value {
    json!({
        "dim": h.dim,
        "normals": ints_json(&h.normals),
        "lineality": ints_json(&v.lineality),
        "rays": ints_json(&v.rays),
    })
}

/// The cone cut out by letter-count vectors of circuits.
pub fn cone_from_circuits(dim: usize, counts: &[Vec<u64>]) -> Result<HRep> {
    HRep::new(dim, counts.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

/// `max <n,x>` subject to `others` and `<n,x> <= 1` is at most zero.
fn implied_by(n: &[BigInt], others: &[IntVec]) -> bool {
    let to_rat = |v: &[BigInt]| -> Vec<Rational> {
        v.iter().map(|x| Rational::from_integer(x.clone())).collect()
    };
    let c = to_rat(n);
    let mut rows: Vec<Vec<Rational>> = others.iter().map(|o| to_rat(o)).collect();
    let mut rhs = vec![Rational::zero(); rows.len()];
    rows.push(c.clone());
    rhs.push(Rational::from_integer(1.into()));
    match maximize(&c, &rows, &rhs) {
        LpOutcome::Optimal(v) => !v.is_positive(),
        LpOutcome::Unbounded => unreachable!("objective is capped by its own row"),
    }
}

/// Removes inequalities implied by the others, scanning in input order and
/// testing each against the ones still kept.
pub fn remove_redundant(h: &HRep) -> HRep {
    let mut kept: Vec<IntVec> = h.normals.clone();
    let mut i = 0;
    while i < kept.len() {
        let others: Vec<IntVec> =
            kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, n)| n.clone()).collect();
        if implied_by(&kept[i], &others) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    HRep { dim: h.dim, normals: kept }
}

/// Normals of `h` that are implied by the others (the ones `remove_redundant` drops).
pub fn redundant_normals(h: &HRep) -> Vec<IntVec> {
    let kept = remove_redundant(h).normal_set();
    h.normals.iter().filter(|n| !kept.contains(*n)).cloned().collect()
}

/// Lineality space and extreme rays of the cone.
pub fn extreme_rays(h: &HRep, caps: &Caps) -> Result<VRep> {
    let out = dd::extreme_rays_of(&h.normals, h.dim, caps.rays)?;
    Ok(VRep { dim: h.dim, lineality: out.lineality, rays: out.rays })
}

/// Irredundant inequalities of the cone generated by a V-representation.
///
/// Runs double description on the polar cone, whose inequalities are the rays
/// and both signs of each lineality vector. Its extreme rays are the facet
/// normals; its lineality space (the equations satisfied by the whole cone)
/// contributes each basis vector with both signs.
pub fn facets_from_vrep(v: &VRep, caps: &Caps) -> Result<HRep> {
    let mut polar: Vec<IntVec> = v.rays.clone();
    for l in &v.lineality {
        polar.push(l.clone());
        polar.push(l.iter().map(|x| -x).collect());
    }
    let polar = HRep::new(v.dim, polar)?;
    let dual = dd::extreme_rays_of(&polar.normals, v.dim, caps.rays)?;
    let mut normals = dual.rays;
    for l in dual.lineality {
        normals.push(l.iter().map(|x| -x).collect());
        normals.push(l);
    }
    normals.sort();
    HRep::new(v.dim, normals)
}

/// Canonical basis of the span of some integer vectors.
pub fn span_basis(vectors: &[IntVec]) -> Vec<IntVec> {
    dd::canonical_basis(vectors)
}
