//! Coxeter groups through their geometric representation.
//!
//! A [`CoxeterSystem`] fixes an ordered generating set and a Coxeter matrix.
//! Group elements are exact matrices over a real cyclotomic field, which gives
//! an oracle for equality, lengths and descents that is independent of any
//! automaton. The minimal-root table drives the automata for reduced words
//! and for shortlex normal forms.

mod automata;
mod element;
pub mod families;
mod group;
mod roots;

use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::automaton::Alphabet;
use crate::error::{Error, Result};
use crate::field::{embed_2cos, CycloField, CycloReal};

pub use automata::{reduced_word_automaton, shortlex_automaton};
pub use element::GroupElement;
pub use group::{
    group_cell, group_cell_in, hecke_onedim, parabolic_consistency, probe_spherical,
    validate_weight, GroupCellResult, Language, Sign, SphericalProbe,
};
pub use roots::{minimal_roots, MinimalRootTable, RootAction};

/// Ordered generators with a Coxeter matrix and the doubled bilinear form.
#[derive(Clone)]
pub struct CoxeterSystem {
    alphabet: Alphabet,
    /// Bond labels; `0` stands for infinity, the diagonal holds `1`.
    matrix: Vec<Vec<u32>>,
    field: Arc<CycloField>,
    /// `form2[s][t] = 2 B(alpha_s, alpha_t) = -2 cos(pi / m_st)`.
    form2: Vec<Vec<CycloReal>>,
}

/// On-disk form of a Coxeter system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterDocument {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
}

impl CoxeterSystem {
    pub fn new<S: AsRef<str>>(generators: &[S], matrix: Vec<Vec<u32>>) -> Result<Self> {
        let alphabet = Alphabet::new(generators.iter().map(|g| g.as_ref()))?;
        let n = alphabet.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid(format!("Coxeter matrix must be {n} x {n}")));
        }
        for i in 0..n {
            if matrix[i][i] != 1 {
                return Err(Error::Invalid(format!("diagonal entry m[{i}][{i}] must be 1")));
            }
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::Invalid(format!("Coxeter matrix is not symmetric at ({i}, {j})")));
                }
                if i != j && matrix[i][j] == 1 {
                    return Err(Error::Invalid(format!(
                        "off-diagonal entry m[{i}][{j}] must be at least 2 or 0 for infinity"
                    )));
                }
            }
        }
        // Labels 2 and 3 give rational cosines, so they do not enlarge the field.
        let modulus = matrix
            .iter()
            .flatten()
            .filter(|&&m| m > 3)
            .fold(1u64, |acc, &m| acc.lcm(&u64::from(m)));
        let field = CycloField::new(modulus)?;
        let mut form2 = vec![vec![CycloReal::zero(&field); n]; n];
        for i in 0..n {
            for j in 0..n {
                form2[i][j] = match matrix[i][j] {
                    1 => CycloReal::from_int(&field, 2),
                    0 => CycloReal::from_int(&field, -2),
                    2 => CycloReal::zero(&field),
                    3 => CycloReal::from_int(&field, -1),
                    m => -embed_2cos(u64::from(m), &field)?,
                };
            }
        }
        Ok(CoxeterSystem { alphabet, matrix, field, form2 })
    }

    pub fn from_document(doc: &CoxeterDocument) -> Result<Self> {
        Self::new(&doc.generators, doc.matrix.clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CoxeterDocument = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }

    pub fn to_document(&self) -> CoxeterDocument {
        CoxeterDocument { generators: self.alphabet.names().to_vec(), matrix: self.matrix.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("serializable")
    }

    /// The same group with the generators listed (and hence ordered) as `order`.
    pub fn with_order<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        let target = Alphabet::new(order.iter().map(|g| g.as_ref()))?;
        let perm = target.permutation_to(&self.alphabet)?;
        let n = self.rank();
        let matrix =
            (0..n).map(|i| (0..n).map(|j| self.matrix[perm[i]][perm[j]]).collect()).collect();
        Self::new(target.names(), matrix)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    /// The bond label between two generators, `None` for infinity.
    pub fn bond(&self, s: usize, t: usize) -> Option<u32> {
        match self.matrix[s][t] {
            0 => None,
            m => Some(m),
        }
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// `2 B(alpha_s, alpha_t)`.
    pub fn form2(&self, s: usize, t: usize) -> &CycloReal {
        &self.form2[s][t]
    }

    /// Whether the standard parabolic subgroup on `subset` is finite, that is,
    /// whether the bilinear form restricted to it is positive definite.
    pub fn is_finite_parabolic(&self, subset: &[usize]) -> bool {
        (1..=subset.len()).all(|k| determinant(&self.form2, &subset[..k]).sign() > 0)
    }

    pub fn is_finite(&self) -> bool {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.is_finite_parabolic(&all)
    }

    /// Generators joined by odd bonds, as connected components in generator order.
    pub fn odd_components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while c[r] != r {
                r = c[r];
            }
            c[x] = r;
            r
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.matrix[i][j] % 2 == 1 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    comp[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_slot: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let r = find(&mut comp, i);
            match root_slot[r] {
                Some(g) => groups[g].push(i),
                None => {
                    root_slot[r] = Some(groups.len());
                    groups.push(vec![i]);
                }
            }
        }
        groups
    }
}

impl std::fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("generators", &self.alphabet.names())
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.matrix == other.matrix
    }
}

impl Eq for CoxeterSystem {}

/// Determinant of the principal submatrix on `rows`, by expansion over column
/// subsets (exact, no division; fine for the small ranks that occur here).
fn determinant(m: &[Vec<CycloReal>], rows: &[usize]) -> CycloReal {
    let k = rows.len();
    let field = m[0][0].field().clone();
    // dp[mask] = determinant of the top |mask| rows restricted to the columns in mask.
    let mut dp = vec![CycloReal::zero(&field); 1 << k];
    dp[0] = CycloReal::from_int(&field, 1);
    for mask in 1usize..(1 << k) {
        let r = mask.count_ones() as usize - 1;
        let mut acc = CycloReal::zero(&field);
        for c in 0..k {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &m[rows[r]][rows[c]];
            if entry.is_zero() {
                continue;
            }
            let rest = mask & !(1 << c);
            // Sign of moving column c to the end among the chosen columns.
            let above = (rest >> c).count_ones();
            let term = entry * &dp[rest];
            acc = if above % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        dp[mask] = acc;
    }
    dp[(1 << k) - 1].clone()
}
