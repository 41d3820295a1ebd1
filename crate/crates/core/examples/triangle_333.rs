use weightcell::automaton::enumerate;
use weightcell::cone::{extreme_rays, remove_redundant, cone_from_circuits};
use weightcell::coxeter::{families, Language};
use weightcell::weight::{EngineConfig, WeightVector, WeightedLanguage};

fn main() -> weightcell::Result<()> {
    let sys = families::triangle(3, 3, 3)?;
    let config = EngineConfig::default();
    let automaton = Language::Lex.automaton(&sys, &config.caps)?;
    let lang = WeightedLanguage::new(&automaton, config)?;
    println!("{} states, {} circuit-free words", automaton.num_states(), lang.circuit_free_words().len());

    let cone = remove_redundant(&cone_from_circuits(3, &lang.inequalities())?);
    let v = extreme_rays(&cone, &config.caps)?;
    println!("facets {:?}", cone.normals());
    println!("lineality {:?} rays {:?}", v.lineality, v.rays);

    // Not a weight function on the group, but a fine weight on the language.
    let phi = WeightVector::parse("s=0,t=1,u=-1", sys.alphabet())?;
    let b = lang.bound(&phi)?;
    println!("bound of {phi}: {}", b.bound);
    let worst = enumerate(&automaton, 10, usize::MAX)?
        .into_iter()
        .map(|w| phi.weight_of_word(&w))
        .max()
        .unwrap();
    println!("largest weight up to length 10: {worst}");
    Ok(())
}
