use crate::error::{Error, Result};

/// Resource limits for the exponential-in-the-worst-case computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of states produced by subset constructions.
    pub states: usize,
    /// Maximum number of labelled simple circuits.
    pub cycles: usize,
    /// Maximum number of intermediate rays in the double description method.
    pub rays: usize,
    /// Maximum number of group elements in a ball.
    pub elements: usize,
    /// Maximum number of words returned by an enumeration.
    pub words: usize,
    /// Maximum number of minimal roots.
    pub roots: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            states: 1_000_000,
            cycles: 100_000,
            rays: 100_000,
            elements: 2_000_000,
            words: 5_000_000,
            roots: 10_000,
        }
    }
}

impl Caps {
    /// Parses overrides of the form `states=100,cycles=50`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap override `{part}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap value `{value}` is not a positive integer")))?;
            if value == 0 {
                return Err(Error::Invalid(format!("cap `{key}` must be positive")));
            }
            match key.trim() {
                "states" => self.states = value,
                "cycles" => self.cycles = value,
                "rays" => self.rays = value,
                "elements" | "ball" => self.elements = value,
                "words" => self.words = value,
                "roots" => self.roots = value,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }

    pub(crate) fn check(count: usize, cap: usize, what: &'static str) -> Result<()> {
        if count > cap {
            Err(Error::CapExceeded { what, cap })
        } else {
            Ok(())
        }
    }
}
