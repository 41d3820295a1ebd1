use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::caps::Caps;
use crate::cone::{HRep, IntVec};
use crate::coxeter::{families, shortlex_automaton, CoxeterSystem};
use crate::error::{Error, Result};
use crate::weight::{EngineConfig, WeightedLanguage};

/// Irreducible affine types that carry non-constant weight functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineFamily {
    Bt(usize),
    Ct(usize),
    Ft4,
    Gt2,
}

impl FromStr for AffineFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let rank = |r: &str| r.parse::<usize>().map_err(|_| Error::Invalid(format!("bad rank in `{s}`")));
        match lower.as_str() {
            "ft4" => Ok(AffineFamily::Ft4),
            "gt2" => Ok(AffineFamily::Gt2),
            _ if lower.starts_with("bt") => Ok(AffineFamily::Bt(rank(&lower[2..])?)),
            _ if lower.starts_with("ct") => Ok(AffineFamily::Ct(rank(&lower[2..])?)),
            _ => Err(Error::Invalid(format!("unknown affine family `{s}`"))),
        }
    }
}

impl fmt::Display for AffineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineFamily::Bt(n) => write!(f, "Bt{n}"),
            AffineFamily::Ct(n) => write!(f, "Ct{n}"),
            AffineFamily::Ft4 => f.write_str("Ft4"),
            AffineFamily::Gt2 => f.write_str("Gt2"),
        }
    }
}

/// The boundedness cone of an affine family in its weight parameters.
///
/// `rho[i]` is the coefficient of `alpha_i` in `2 rho(phi)`, written as a
/// linear form in the parameters. Because the fundamental coweights are dual
/// to the simple roots, `rho[i]` is also the pairing with `omega_i`, so the
/// rows of `rho` are the coweight inequalities before redundancy removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineConeSpec {
    pub family: AffineFamily,
    pub parameters: Vec<&'static str>,
    /// Parameter index of each generator `s_0, ..., s_n`.
    pub generator_parameters: Vec<usize>,
    /// Defining inequalities `normal . params <= 0`.
    pub normals: Vec<Vec<i64>>,
    pub rho: Vec<Vec<i64>>,
}

impl AffineConeSpec {
    pub fn system(&self) -> Result<CoxeterSystem> {
        match self.family {
            AffineFamily::Bt(n) => families::b_tilde(n),
            AffineFamily::Ct(n) => families::c_tilde(n),
            AffineFamily::Ft4 => families::f_tilde4(),
            AffineFamily::Gt2 => families::g_tilde2(),
        }
    }

    pub fn hrep(&self) -> Result<HRep> {
        HRep::from_ints(self.parameters.len(), &self.normals)
    }

    pub fn coweight_hrep(&self) -> Result<HRep> {
        HRep::from_ints(self.parameters.len(), &self.rho)
    }

    pub fn format_normal(&self, normal: &[i64]) -> String {
        let mut out = String::new();
        for (c, p) in normal.iter().zip(&self.parameters) {
            if *c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(if *c > 0 { "+" } else { "-" });
            } else if *c < 0 {
                out.push('-');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(p);
        }
        format!("{out} <= 0")
    }
}

pub fn affine_cone(family: AffineFamily) -> Result<AffineConeSpec> {
    let spec = match family {
        AffineFamily::Bt(n) => {
            if n < 3 {
                return Err(Error::Invalid("Bt needs rank at least 3".into()));
            }
            let k = n as i64;
            let mut gens = vec![0; n + 1];
            gens[n] = 1;
            // 2 rho = sum_i (2(n-i)a + b) e_i, and alpha-coordinate j sums the first j terms.
            let rho = (1..=k).map(|j| vec![j * (2 * k - j - 1), j]).collect();
            AffineConeSpec {
                family,
                parameters: vec!["a", "b"],
                generator_parameters: gens,
                normals: vec![vec![2 * (k - 1), 1], vec![k - 1, 1]],
                rho,
            }
        }
        AffineFamily::Ct(n) => {
            if n == 0 {
                return Err(Error::Invalid("Ct needs rank at least 1".into()));
            }
            let k = n as i64;
            // s_n carries a, s_1..s_{n-1} carry b, s_0 carries c.
            let mut gens = vec![1; n + 1];
            gens[0] = 2;
            gens[n] = 0;
            let rho = (1..=k).map(|j| vec![j, j * (2 * k - j - 1), j]).collect();
            let mut normals = vec![vec![1, 2 * (k - 1), 1], vec![1, k - 1, 1]];
            normals.dedup();
            AffineConeSpec { family, parameters: vec!["a", "b", "c"], generator_parameters: gens, normals, rho }
        }
        AffineFamily::Ft4 => AffineConeSpec {
            family,
            parameters: vec!["a", "b"],
            generator_parameters: vec![0, 0, 0, 1, 1],
            normals: vec![vec![5, 3], vec![6, 5]],
            rho: vec![vec![10, 6], vec![18, 12], vec![24, 18], vec![12, 10]],
        },
        AffineFamily::Gt2 => AffineConeSpec {
            family,
            parameters: vec!["a", "b"],
            // s_0 and s_2 are joined by a simple bond; s_1 is the short simple root.
            generator_parameters: vec![0, 1, 0],
            normals: vec![vec![2, 1], vec![3, 2]],
            // Positive roots of G2 with alpha_1 short: the short ones sum to 4a_1 + 2a_2,
            // the long ones to 6a_1 + 4a_2, weighted by b and a respectively.
            rho: vec![vec![6, 4], vec![4, 2]],
        },
    };
    Ok(spec)
}

/// The boundedness cone computed from the shortlex automaton, pulled back to
/// the family's parameters: a simple circuit with letter counts `n` gives the
/// inequality whose parameter coefficient `j` sums `n_s` over generators `s`
/// carrying parameter `j`.
pub fn generic_affine_cone(spec: &AffineConeSpec, caps: &Caps) -> Result<HRep> {
    let sys = spec.system()?;
    let automaton = shortlex_automaton(&sys, caps)?;
    let weighted = WeightedLanguage::new(&automaton, EngineConfig { caps: *caps, strict_graph_sense: false })?;
    let dim = spec.parameters.len();
    let normals: Vec<IntVec> = weighted
        .inequalities()
        .iter()
        .map(|counts| {
            let mut v = vec![BigInt::from(0); dim];
            for (s, &c) in counts.iter().enumerate() {
                v[spec.generator_parameters[s]] += c;
            }
            v
        })
        .collect();
    HRep::new(dim, normals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_inequalities() {
        let c2 = affine_cone(AffineFamily::Ct(2)).unwrap();
        let shown: Vec<String> = c2.normals.iter().map(|n| c2.format_normal(n)).collect();
        assert_eq!(shown, ["a+2b+c <= 0", "a+b+c <= 0"]);
        let b3 = affine_cone(AffineFamily::Bt(3)).unwrap();
        assert_eq!(b3.normals, vec![vec![4, 1], vec![2, 1]]);
        let f4 = affine_cone(AffineFamily::Ft4).unwrap();
        assert_eq!(f4.normals, vec![vec![5, 3], vec![6, 5]]);
        assert!(affine_cone(AffineFamily::Bt(2)).is_err());
    }

    #[test]
    fn coweight_rows_cut_out_the_same_cone() {
        for fam in [AffineFamily::Bt(3), AffineFamily::Bt(5), AffineFamily::Ct(1), AffineFamily::Ct(4), AffineFamily::Ft4, AffineFamily::Gt2] {
            let spec = affine_cone(fam).unwrap();
            assert!(spec.hrep().unwrap().same_cone(&spec.coweight_hrep().unwrap()).unwrap(), "{fam}");
            assert_eq!(spec.system().unwrap().rank(), spec.generator_parameters.len());
        }
    }

    #[test]
    fn c_tilde_two_matches_generic_cone() {
        let spec = affine_cone(AffineFamily::Ct(2)).unwrap();
        let generic = generic_affine_cone(&spec, &Caps::default()).unwrap();
        assert!(generic.same_cone(&spec.hrep().unwrap()).unwrap());
    }

    #[test]
    fn family_names() {
        assert_eq!("Bt3".parse::<AffineFamily>().unwrap(), AffineFamily::Bt(3));
        assert_eq!("ft4".parse::<AffineFamily>().unwrap().to_string(), "Ft4");
        assert!("Xt2".parse::<AffineFamily>().is_err());
    }
}
