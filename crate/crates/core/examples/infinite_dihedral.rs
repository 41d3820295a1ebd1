//! The infinite dihedral group: its shortlex automaton, boundedness cone and
//! the cell of `s=1,t=-1`.

use weightcell::automaton::{enumerate, to_dot};
use weightcell::coxeter::{families, group_cell, Language};
use weightcell::weight::{EngineConfig, WeightVector};

fn main() -> weightcell::Result<()> {
    let sys = families::dihedral(0)?;
    let config = EngineConfig::default();
    let lang = Language::Lex.automaton(&sys, &config.caps)?;
    println!("shortlex automaton: {} states", lang.num_states());

    let phi = WeightVector::parse("s=1,t=-1", sys.alphabet())?;
    let r = group_cell(&sys, &phi, Language::Lex, config)?;
    println!("bound {}", r.bound);
    for w in enumerate(&r.cell.dfa, 7, 100)? {
        println!("  {}", sys.alphabet().format(&w));
    }
    print!("{}", to_dot(&r.cell.dfa, "cell"));
    Ok(())
}
