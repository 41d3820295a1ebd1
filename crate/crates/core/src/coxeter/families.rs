//! Standard Coxeter systems with Bourbaki labelling.
//!
//! Spherical types use generators `1..n`, affine types `0..n` with `0` the
//! affine node, dihedral groups `s, t`, and triangle groups `s, t, u` where
//! `Delta(p, q, r)` has `m(s,u) = p`, `m(s,t) = q` and `m(t,u) = r`.
//! A bond label of `0` means infinity.

use super::CoxeterSystem;
use crate::error::{Error, Result};

fn from_bonds(names: Vec<String>, bonds: &[(usize, usize, u32)]) -> Result<CoxeterSystem> {
    let n = names.len();
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(i, j, label) in bonds {
        m[i][j] = label;
        m[j][i] = label;
    }
    CoxeterSystem::new(&names, m)
}

fn numbered(range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

/// The dihedral group `I2(m)`; `m = 0` gives the infinite dihedral group.
pub fn dihedral(m: u32) -> Result<CoxeterSystem> {
    if m == 1 {
        return Err(Error::Invalid("dihedral bond label must be at least 2".into()));
    }
    from_bonds(vec!["s".into(), "t".into()], &[(0, 1, m)])
}

pub fn triangle(p: u32, q: u32, r: u32) -> Result<CoxeterSystem> {
    from_bonds(vec!["s".into(), "t".into(), "u".into()], &[(0, 2, p), (0, 1, q), (1, 2, r)])
}

/// `A_n`: a path of `n` generators with simple bonds.
pub fn type_a(n: usize) -> Result<CoxeterSystem> {
    if n == 0 {
        return Err(Error::Invalid("type A needs rank at least 1".into()));
    }
    let bonds: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect();
    from_bonds(numbered(1..=n), &bonds)
}

/// `B_n` with the double bond between `s_{n-1}` and `s_n`.
pub fn type_b(n: usize) -> Result<CoxeterSystem> {
    if n < 2 {
        return Err(Error::Invalid("type B needs rank at least 2".into()));
    }
    let mut bonds: Vec<_> = (0..n - 2).map(|i| (i, i + 1, 3)).collect();
    bonds.push((n - 2, n - 1, 4));
    from_bonds(numbered(1..=n), &bonds)
}

/// `F4` with the double bond between `s_2` and `s_3`.
pub fn f4() -> Result<CoxeterSystem> {
    from_bonds(numbered(1..=4), &[(0, 1, 3), (1, 2, 4), (2, 3, 3)])
}

/// `C~_n`: `s_0 = s_1 - ... - s_{n-1} = s_n`; for `n = 1` the infinite dihedral group.
pub fn c_tilde(n: usize) -> Result<CoxeterSystem> {
    match n {
        0 => Err(Error::Invalid("C~ needs rank at least 1".into())),
        1 => from_bonds(numbered(0..=1), &[(0, 1, 0)]),
        _ => {
            let mut bonds = vec![(0, 1, 4)];
            bonds.extend((1..n - 1).map(|i| (i, i + 1, 3)));
            bonds.push((n - 1, n, 4));
            from_bonds(numbered(0..=n), &bonds)
        }
    }
}

/// `B~_n` (`n >= 3`): `s_0` and `s_1` both attached to `s_2`, double bond at the end.
pub fn b_tilde(n: usize) -> Result<CoxeterSystem> {
    if n < 3 {
        return Err(Error::Invalid("B~ needs rank at least 3".into()));
    }
    let mut bonds = vec![(0, 2, 3)];
    bonds.extend((1..n - 1).map(|i| (i, i + 1, 3)));
    bonds.push((n - 1, n, 4));
    from_bonds(numbered(0..=n), &bonds)
}

/// `F~4`: `s_0 - s_1 - s_2 = s_3 - s_4`.
pub fn f_tilde4() -> Result<CoxeterSystem> {
    from_bonds(numbered(0..=4), &[(0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)])
}

/// `G~2`: `s_0 - s_2 ≡ s_1` with the sixfold bond between `s_1` and `s_2`.
pub fn g_tilde2() -> Result<CoxeterSystem> {
    from_bonds(numbered(0..=2), &[(0, 2, 3), (1, 2, 6)])
}

/// Looks a family up by a short name such as `B3`, `F4`, `I2(6)`, `Ct2`,
/// `Bt3`, `Ft4`, `Gt2` or `Delta(2,4,6)`.
pub fn by_name(name: &str) -> Result<CoxeterSystem> {
    let lower = name.trim().to_ascii_lowercase();
    let bad = || Error::Invalid(format!("unknown Coxeter family `{name}`"));
    let rank = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
    if let Some(args) = lower.strip_prefix("delta(").and_then(|r| r.strip_suffix(')')) {
        let v: Vec<u32> =
            args.split(',').map(|x| x.trim().parse::<u32>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        return match v.as_slice() {
            [p, q, r] => triangle(*p, *q, *r),
            _ => Err(bad()),
        };
    }
    if let Some(arg) = lower.strip_prefix("i2(").and_then(|r| r.strip_suffix(')')) {
        return match arg.trim() {
            "inf" | "infinity" | "0" => dihedral(0),
            m => dihedral(m.parse().map_err(|_| bad())?),
        };
    }
    match lower.as_str() {
        "f4" => f4(),
        "ft4" => f_tilde4(),
        "gt2" => g_tilde2(),
        _ => {
            if let Some(r) = lower.strip_prefix("ct") {
                c_tilde(rank(r)?)
            } else if let Some(r) = lower.strip_prefix("bt") {
                b_tilde(rank(r)?)
            } else if let Some(r) = lower.strip_prefix('a') {
                type_a(rank(r)?)
            } else if let Some(r) = lower.strip_prefix('b') {
                type_b(rank(r)?)
            } else {
                Err(bad())
            }
        }
    }
}
