//! One-dimensional representations of the weighted Hecke algebra of Δ(2,4,6)
//! with all parameters 1. Only sign patterns with a bounded weight have a cell.

use weightcell::coxeter::{families, hecke_onedim, Sign};
use weightcell::weight::EngineConfig;

fn main() -> weightcell::Result<()> {
    let sys = families::triangle(2, 4, 6)?;
    for signs in ["-,+,-", "+,-,-", "-,-,+", "-,-,-", "+,+,+"] {
        let parsed = Sign::parse_list(signs)?;
        match hecke_onedim(&sys, &[1, 1, 1], &parsed, EngineConfig::default()) {
            Ok((phi, r)) => {
                let ws: Vec<String> = r.witnesses.iter().map(|w| sys.alphabet().format(w)).collect();
                println!("{signs}: phi {phi}, b = {}, witnesses {}", r.bound, ws.join(" "));
            }
            Err(e) => println!("{signs}: {e}"),
        }
    }
    Ok(())
}
