use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::automata::{reduced_word_automaton, shortlex_automaton};
use super::{CoxeterSystem, GroupElement};
use crate::automaton::{sort_shortlex, Automaton, Word};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::weight::{CellAutomata, EngineConfig, WeightVector, WeightedLanguage};

/// Which geodesic language a group computation runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Language {
    /// Shortlex normal forms, one word per element.
    Lex,
    /// All reduced words.
    Reduced,
}

impl Language {
    pub fn automaton(self, sys: &CoxeterSystem, caps: &Caps) -> Result<Automaton> {
        match self {
            Language::Lex => shortlex_automaton(sys, caps),
            Language::Reduced => reduced_word_automaton(sys, caps),
        }
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" | "shortlex" => Ok(Language::Lex),
            "reduced" => Ok(Language::Reduced),
            other => Err(Error::Parse(format!("unknown language `{other}` (expected lex or reduced)"))),
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Language::Lex => "lex",
            Language::Reduced => "reduced",
        })
    }
}

/// Bound and cell of a weight function on a Coxeter group.
#[derive(Debug, Clone)]
pub struct GroupCellResult {
    pub language: Language,
    /// Normal forms of the images of the simple circuit subwords.
    pub x: Vec<Word>,
    /// Normal forms of the images of the circuit-free words.
    pub y: Vec<Word>,
    pub bound: Rational,
    /// Circuit-free words of the language attaining the bound.
    pub witnesses: Vec<Word>,
    pub cell: CellAutomata,
}

/// True when `phi` takes equal values across every odd bond.
pub fn validate_weight(sys: &CoxeterSystem, phi: &WeightVector) -> Result<bool> {
    let phi = phi.reordered(sys.alphabet())?;
    let n = sys.rank();
    Ok((0..n).all(|s| {
        (0..n).all(|t| sys.bond(s, t).is_none_or(|m| m % 2 == 0 || phi.value(s) == phi.value(t)))
    }))
}

fn normal_forms(sys: &CoxeterSystem, words: &[Word]) -> Vec<Word> {
    // Products of shorter words are reused when a word extends one seen before.
    let mut products: HashMap<Word, GroupElement> = HashMap::new();
    let mut elements: HashSet<GroupElement> = HashSet::new();
    let mut sorted = words.to_vec();
    sort_shortlex(&mut sorted);
    for w in sorted {
        let g = match w.letters().split_last() {
            Some((&last, init)) => match products.get(&Word::new(init.to_vec())) {
                Some(prefix) => sys.mul_right(prefix, last),
                None => sys.element_of_word(&w),
            },
            None => sys.identity(),
        };
        elements.insert(g.clone());
        products.insert(w, g);
    }
    let mut out: Vec<Word> = elements.iter().map(|g| sys.lex_word(g)).collect();
    sort_shortlex(&mut out);
    out
}

/// Runs the weight engine on the automaton for `language`.
pub fn group_cell(
    sys: &CoxeterSystem,
    phi: &WeightVector,
    language: Language,
    config: EngineConfig,
) -> Result<GroupCellResult> {
    let automaton = language.automaton(sys, &config.caps)?;
    let weighted = WeightedLanguage::new(&automaton, config)?;
    group_cell_in(sys, &weighted, language, phi)
}

/// As [`group_cell`], reusing an already analysed language automaton.
pub fn group_cell_in(
    sys: &CoxeterSystem,
    weighted: &WeightedLanguage,
    language: Language,
    phi: &WeightVector,
) -> Result<GroupCellResult> {
    if !validate_weight(sys, phi)? {
        return Err(Error::Invalid(format!(
            "`{phi}` is not a weight function on the group: generators joined by an odd bond need equal weights"
        )));
    }
    let result = weighted.cell(phi)?;
    Ok(GroupCellResult {
        language,
        x: normal_forms(sys, &weighted.simple_circuit_words()),
        y: normal_forms(sys, weighted.circuit_free_words()),
        bound: result.bound,
        witnesses: result.witnesses,
        cell: result.automata.expect("cell() fills the automata"),
    })
}

/// Checks that `g` is longest in its double coset for the positive-weight
/// generators and shortest for the negative ones. Returns the violations.
pub fn parabolic_consistency(sys: &CoxeterSystem, phi: &WeightVector, g: &GroupElement) -> Result<Vec<String>> {
    let phi = phi.reordered(sys.alphabet())?;
    let len = sys.length(g);
    let mut out = Vec::new();
    for s in 0..sys.rank() {
        let v = phi.value(s);
        if v.is_zero() {
            continue;
        }
        let name = sys.alphabet().name(s);
        let (want_down, expected) = if v.is_positive() { (true, len.checked_sub(1)) } else { (false, Some(len + 1)) };
        let expected = expected.map_or("-1".to_string(), |e| e.to_string());
        if sys.is_left_descent(g, s) != want_down {
            out.push(format!("l({name} g) should be {expected} (l(g) = {len})"));
        }
        if sys.is_right_descent(g, s) != want_down {
            out.push(format!("l(g {name}) should be {expected} (l(g) = {len})"));
        }
    }
    Ok(out)
}

/// Sign of a one-dimensional Hecke representation on a generator:
/// `Plus` sends `T_s` to `q^{psi(s)}`, `Minus` to `-q^{-psi(s)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn parse_list(text: &str) -> Result<Vec<Sign>> {
        text.split(',')
            .map(str::trim)
            .map(|t| match t {
                "+" | "plus" => Ok(Sign::Plus),
                "-" | "minus" => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("sign `{other}` is neither + nor -"))),
            })
            .collect()
    }
}

/// The weight function `phi(s) = ±psi(s)` of a one-dimensional representation
/// of the weighted Hecke algebra, with its bound and cell.
pub fn hecke_onedim(
    sys: &CoxeterSystem,
    psi: &[u64],
    signs: &[Sign],
    config: EngineConfig,
) -> Result<(WeightVector, GroupCellResult)> {
    let n = sys.rank();
    if psi.len() != n || signs.len() != n {
        return Err(Error::Invalid(format!("expected {n} parameters and {n} signs")));
    }
    if psi.contains(&0) {
        return Err(Error::Invalid("Hecke parameters must be positive".into()));
    }
    for comp in sys.odd_components() {
        let first = comp[0];
        if comp.iter().any(|&s| psi[s] != psi[first]) {
            return Err(Error::Invalid("Hecke parameters must agree across odd bonds".into()));
        }
        if comp.iter().any(|&s| signs[s] != signs[first]) {
            return Err(Error::Invalid(
                "no one-dimensional representation has different signs across an odd bond".into(),
            ));
        }
    }
    let values: Vec<Rational> = psi
        .iter()
        .zip(signs)
        .map(|(&p, sign)| {
            let v = Rational::from_integer(p.into());
            if *sign == Sign::Plus { v } else { -v }
        })
        .collect();
    let phi = WeightVector::new(sys.alphabet().clone(), values)?;
    let cell = group_cell(sys, &phi, Language::Lex, config)?;
    Ok((phi, cell))
}

/// Whether the bound is attained inside a finite standard parabolic subgroup,
/// judged on the circuit-free witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalProbe {
    pub bound: Rational,
    /// Witness normal forms with whether their support generates a finite group.
    pub witnesses: Vec<(Word, bool)>,
    pub attained_on_spherical: bool,
}

pub fn probe_spherical(sys: &CoxeterSystem, result: &GroupCellResult) -> SphericalProbe {
    let witnesses: Vec<(Word, bool)> = normal_forms(sys, &result.witnesses)
        .into_iter()
        .map(|w| {
            let mut support: Vec<usize> = w.letters().to_vec();
            support.sort_unstable();
            support.dedup();
            let finite = sys.is_finite_parabolic(&support);
            (w, finite)
        })
        .collect();
    let attained_on_spherical = witnesses.iter().any(|(_, f)| *f);
    SphericalProbe { bound: result.bound.clone(), witnesses, attained_on_spherical }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;
    use crate::automaton::{equivalent, Automaton};
    use crate::field::int;

    fn phi(sys: &CoxeterSystem, values: &[i64]) -> WeightVector {
        WeightVector::from_ints(sys.alphabet(), values).unwrap()
    }

    #[test]
    fn weight_validation() {
        let t333 = triangle(3, 3, 3).unwrap();
        assert!(!validate_weight(&t333, &phi(&t333, &[0, 1, -1])).unwrap());
        assert!(validate_weight(&t333, &phi(&t333, &[2, 2, 2])).unwrap());
        let c3 = c_tilde(3).unwrap();
        assert!(validate_weight(&c3, &phi(&c3, &[1, 2, 2, 5])).unwrap());
        let t246 = triangle(2, 4, 6).unwrap();
        assert!(validate_weight(&t246, &phi(&t246, &[1, -7, 3])).unwrap());
    }

    #[test]
    fn intro_example() {
        let sys = triangle(2, 4, 6).unwrap();
        let r = group_cell(&sys, &phi(&sys, &[1, 2, -5]), Language::Lex, EngineConfig::default()).unwrap();
        assert_eq!(r.bound, int(6));
        // s t s t (u t s t)*
        let expected = Automaton::from_named(
            &["s", "t", "u"],
            8,
            0,
            [4],
            &[(0, "s", 1), (1, "t", 2), (2, "s", 3), (3, "t", 4), (4, "u", 5), (5, "t", 6), (6, "s", 7), (7, "t", 4)],
        )
        .unwrap();
        assert!(equivalent(&r.cell.dfa, &expected).unwrap().is_equal());
        let g = sys.element_of_word(&sys.alphabet().parse_word("stst").unwrap());
        assert!(parabolic_consistency(&sys, &phi(&sys, &[1, 2, -5]), &g).unwrap().is_empty());
    }

    #[test]
    fn hecke_example() {
        let sys = triangle(2, 4, 6).unwrap();
        let signs = Sign::parse_list("-,+,-").unwrap();
        let (phi3, r) = hecke_onedim(&sys, &[1, 1, 1], &signs, EngineConfig::default()).unwrap();
        assert_eq!(phi3.to_string(), "s=-1,t=1,u=-1");
        assert_eq!(r.bound, int(1));
        let shown: Vec<String> = r.witnesses.iter().map(|w| sys.alphabet().format(w)).collect();
        // `tutst` runs 0, 2, 3, 4, 10, 11 in the shortlex automaton and has weight 1.
        assert_eq!(shown, ["t", "tst", "tut", "tstut", "tutst", "tutut", "tstutut", "tututst"]);
        let t333 = triangle(3, 3, 3).unwrap();
        let mixed = Sign::parse_list("+,-,+").unwrap();
        assert!(hecke_onedim(&t333, &[1, 1, 1], &mixed, EngineConfig::default()).is_err());
        let all_plus = Sign::parse_list("+,+,+").unwrap();
        let err = hecke_onedim(&sys, &[1, 1, 1], &all_plus, EngineConfig::default()).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn zero_weight_gives_everything() {
        let sys = dihedral(0).unwrap();
        let r = group_cell(&sys, &phi(&sys, &[0, 0]), Language::Reduced, EngineConfig::default()).unwrap();
        assert_eq!(r.bound, int(0));
        let all = reduced_word_automaton(&sys, &Caps::default()).unwrap();
        assert!(equivalent(&r.cell.dfa, &all).unwrap().is_equal());
    }

    #[test]
    fn probe_reports_support() {
        let sys = triangle(2, 4, 6).unwrap();
        let r = group_cell(&sys, &phi(&sys, &[-1, 1, -1]), Language::Lex, EngineConfig::default()).unwrap();
        let probe = probe_spherical(&sys, &r);
        assert!(probe.attained_on_spherical);
        assert_eq!(probe.witnesses.len(), 8);
    }
}
