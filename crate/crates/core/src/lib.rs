pub mod automaton;
pub mod caps;
pub mod cli;
pub mod closed_forms;
pub mod cone;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod weight;

pub use caps::Caps;
pub use error::{Error, Result};
