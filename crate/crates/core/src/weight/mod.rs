//! Weight functions on regular languages: boundedness, bounds and cells.
//!
//! Everything is computed relative to a fixed deterministic automaton for the
//! language. Circuit-free words and simple circuits are those of the trimmed
//! automaton, so states that lie on no accepted path never contribute.
//!
//! The central object is [`WeightedLanguage`], which caches the simple cycles
//! and circuit-free words of an automaton so that many weight vectors can be
//! queried cheaply.

mod cycles;
mod engine;

use std::fmt;

use num_traits::Zero;

pub use cycles::{simple_cycles, SimpleCycle};
pub use engine::{
    bound, cell_automaton, circuit_free_words, excise_first_circuit, is_bounded,
    strictly_negative_cell, tight_cell_dfa, BoundednessReport, CellAutomata, CellResult,
    EngineConfig, WeightedLanguage,
};

use crate::automaton::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::field::{parse_rational, Rational};

/// A rational value on each letter of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    alphabet: Alphabet,
    values: Vec<Rational>,
}

impl WeightVector {
    pub fn new(alphabet: Alphabet, values: Vec<Rational>) -> Result<Self> {
        if values.len() != alphabet.len() {
            return Err(Error::Invalid(format!(
                "weight vector has {} entries for an alphabet of {} letters",
                values.len(),
                alphabet.len()
            )));
        }
        Ok(WeightVector { alphabet, values })
    }

    pub fn from_ints(alphabet: &Alphabet, values: &[i64]) -> Result<Self> {
        WeightVector::new(alphabet.clone(), values.iter().map(|&v| crate::field::int(v)).collect())
    }

    /// Parses `s=1,t=2,u=-5` (every letter exactly once, rational literals
    /// allowed) or the positional form `1,2,-5` in alphabet order.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        if parts.iter().all(|p| !p.contains('=')) {
            let values = parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>>>()?;
            return WeightVector::new(alphabet.clone(), values);
        }
        let mut values: Vec<Option<Rational>> = vec![None; alphabet.len()];
        for part in parts {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("`{part}` is not letter=value")))?;
            let idx = alphabet.index(name.trim())?;
            if values[idx].is_some() {
                return Err(Error::Parse(format!("letter `{}` assigned twice", name.trim())));
            }
            values[idx] = Some(parse_rational(value)?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::Parse(format!("no weight given for `{}`", alphabet.name(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(alphabet.clone(), values)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, letter: usize) -> &Rational {
        &self.values[letter]
    }

    pub fn weight_of_word(&self, word: &Word) -> Rational {
        word.letters().iter().fold(Rational::zero(), |acc, &l| acc + &self.values[l])
    }

    /// `sum_s counts[s] * phi(s)`.
    pub fn weight_of_counts(&self, counts: &[u64]) -> Rational {
        counts
            .iter()
            .zip(&self.values)
            .filter(|(c, _)| **c != 0)
            .fold(Rational::zero(), |acc, (&c, v)| acc + v * Rational::from_integer(c.into()))
    }

    /// The same weights listed in the order of `target` (matching by letter name).
    pub fn reordered(&self, target: &Alphabet) -> Result<WeightVector> {
        let perm = self.alphabet.permutation_to(target)?;
        let mut values = vec![Rational::zero(); self.values.len()];
        for (i, v) in self.values.iter().enumerate() {
            values[perm[i]] = v.clone();
        }
        WeightVector::new(target.clone(), values)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{}={}", self.alphabet.name(i), v))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
