use weightcell::cone::{cone_from_circuits, remove_redundant};
use weightcell::coxeter::{families, Language};
use weightcell::weight::{EngineConfig, WeightedLanguage};

fn main() -> weightcell::Result<()> {
    for m in 3..=5 {
        let sys = families::triangle(2, 3, 2 * m)?;
        let config = EngineConfig::default();
        let automaton = Language::Lex.automaton(&sys, &config.caps)?;
        let lang = WeightedLanguage::new(&automaton, config)?;
        // s and t share a weight a, u carries b.
        let pulled: Vec<Vec<u64>> = lang.inequalities().iter().map(|c| vec![c[0] + c[1], c[2]]).collect();
        let cone = remove_redundant(&cone_from_circuits(2, &pulled)?);
        let facets: Vec<String> = cone.normals().iter().map(|n| format!("{}a+{}b <= 0", n[0], n[1])).collect();
        println!("Delta(2,3,{}): {} states; {}", 2 * m, automaton.num_states(), facets.join(", "));
    }
    Ok(())
}
