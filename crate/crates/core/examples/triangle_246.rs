//! The running example: Δ(2,4,6) with `s=1,t=2,u=-5`.

use weightcell::coxeter::{families, group_cell, parabolic_consistency, Language};
use weightcell::weight::{EngineConfig, WeightVector};

fn main() -> weightcell::Result<()> {
    let sys = families::triangle(2, 4, 6)?;
    let phi = WeightVector::parse("s=1,t=2,u=-5", sys.alphabet())?;
    let r = group_cell(&sys, &phi, Language::Lex, EngineConfig::default())?;
    let show = |ws: &[weightcell::automaton::Word]| {
        ws.iter().map(|w| sys.alphabet().format(w)).collect::<Vec<_>>().join(" ")
    };
    println!("bound {} attained by {}", r.bound, show(&r.witnesses));
    println!("|X| = {}, |Y| = {}", r.x.len(), r.y.len());
    println!("cell DFA:\n{}", r.cell.dfa);

    let g = sys.element_of_word(&sys.alphabet().parse_word("stst")?);
    println!("stst violations: {:?}", parabolic_consistency(&sys, &phi, &g)?);
    Ok(())
}
