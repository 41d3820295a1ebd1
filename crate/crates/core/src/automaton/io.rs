use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Alphabet, Automaton};
use crate::error::{Error, Result};

/// Serialized form of an [`Automaton`].
///
/// ```json
/// {"alphabet":["s","t"],"states":3,"start":0,"accept":[0,1,2],
///  "transitions":[[0,"s",1],[0,"t",2]],"deterministic":true}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub start: usize,
    pub accept: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
    #[serde(default)]
    pub deterministic: Option<bool>,
}

impl AutomatonDocument {
    pub fn from_automaton(a: &Automaton) -> Self {
        AutomatonDocument {
            alphabet: a.alphabet().names().to_vec(),
            states: a.num_states(),
            start: a.start(),
            accept: a.accept_states(),
            transitions: a
                .transitions()
                .map(|(s, l, t)| (s, a.alphabet().name(l).to_string(), t))
                .collect(),
            deterministic: Some(a.is_deterministic()),
        }
    }

    /// Validates the document. A `deterministic: true` flag must agree with the transitions.
    pub fn to_automaton(&self) -> Result<Automaton> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let edges = self
            .transitions
            .iter()
            .map(|(s, l, t)| alphabet.index(l).map(|l| (*s, l, *t)))
            .collect::<Result<Vec<_>>>()?;
        let a = Automaton::new(alphabet, self.states, self.start, self.accept.iter().copied(), edges)?;
        if self.deterministic == Some(true) && !a.is_deterministic() {
            return Err(Error::Invalid(
                "document is flagged deterministic but has two targets for one state and letter".into(),
            ));
        }
        Ok(a)
    }
}

impl Automaton {
    /// Stable JSON text: one transition per line, transitions sorted.
    pub fn to_json(&self) -> String {
        let doc = AutomatonDocument::from_automaton(self);
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"alphabet\": {},", js(&doc.alphabet));
        let _ = writeln!(out, "  \"states\": {},", doc.states);
        let _ = writeln!(out, "  \"start\": {},", doc.start);
        let _ = writeln!(out, "  \"accept\": {},", js(&doc.accept));
        if doc.transitions.is_empty() {
            out.push_str("  \"transitions\": [],\n");
        } else {
            out.push_str("  \"transitions\": [\n");
            let lines: Vec<String> = doc.transitions.iter().map(|t| format!("    {}", js(t))).collect();
            out.push_str(&lines.join(",\n"));
            out.push_str("\n  ],\n");
        }
        let _ = writeln!(out, "  \"deterministic\": {}", self.is_deterministic());
        out.push('}');
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(AutomatonDocument::from_automaton(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Automaton> {
        let doc: AutomatonDocument = serde_json::from_str(text)?;
        doc.to_automaton()
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Automaton> {
        let doc: AutomatonDocument = serde_json::from_value(value.clone())?;
        doc.to_automaton()
    }
}

fn js<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

const PALETTE: [&str; 8] = ["black", "blue", "red", "darkgreen", "orange", "purple", "brown", "gray40"];

/// Graphviz rendering. Edges are labelled and coloured by letter (black, blue,
/// red, ... in alphabet order), accept states are double circles and the
/// start state receives an arrow from an invisible point node.
pub fn to_dot(a: &Automaton, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
    out.push_str("  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..a.num_states() {
        let shape = if a.is_accepting(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  {q} [shape={shape}];");
    }
    let _ = writeln!(out, "  __start -> {};", a.start());
    for (s, l, t) in a.transitions() {
        let _ = writeln!(
            out,
            "  {s} -> {t} [label=\"{}\", color={}, fontcolor={}];",
            a.alphabet().name(l),
            PALETTE[l % PALETTE.len()],
            PALETTE[l % PALETTE.len()]
        );
    }
    out.push_str("}\n");
    out
}
