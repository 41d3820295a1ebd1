//! Reads an automaton from JSON (a path argument, or a built-in sample),
//! then prints its minimal DFA, cone and the bound of an all-minus-one weight.

use weightcell::automaton::{determinize_capped, minimize, Automaton};
use weightcell::cone::{cone_from_circuits, remove_redundant};
use weightcell::field::int;
use weightcell::weight::{EngineConfig, WeightVector, WeightedLanguage};

const SAMPLE: &str = r#"{
  "alphabet": ["a", "b"],
  "states": 3,
  "start": 0,
  "accept": [0, 2],
  "transitions": [[0, "a", 1], [1, "b", 0], [1, "b", 2], [2, "a", 2]]
}"#;

fn main() -> weightcell::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let a = Automaton::from_json(&text)?;
    let config = EngineConfig::default();
    let m = minimize(&determinize_capped(&a, config.caps.states)?)?;
    println!("{}", m.to_json());

    let lang = WeightedLanguage::new(&a, config)?;
    let cone = remove_redundant(&cone_from_circuits(a.alphabet().len(), &lang.inequalities())?);
    println!("cone normals {:?}", cone.normals());

    let phi = WeightVector::new(a.alphabet().clone(), vec![int(-1); a.alphabet().len()])?;
    println!("bound {}", lang.bound(&phi)?.bound);
    Ok(())
}
