use weightcell::closed_forms::{bn_bound, dihedral_bound, exhaustive_cell, f4_bound};
use weightcell::field::{int, Rational};
use weightcell::weight::WeightVector;
use weightcell::Caps;

fn main() -> weightcell::Result<()> {
    let (a, b) = (int(2), Rational::new((-3).into(), 2.into()));
    let d = dihedral_bound(4, &a, &b)?;
    println!("I2(8)  bound {} cell {:?}", d.bound, d.formatted_cell());
    let b4 = bn_bound(4, &a, &b)?;
    println!("B4     bound {} cell {:?}", b4.bound, b4.formatted_cell());
    let f = f4_bound(&a, &b)?;
    println!("F4     bound {} cell {:?}", f.bound, f.formatted_cell());

    // Brute force over all 1152 elements agrees.
    let values = [a.clone(), a.clone(), b.clone(), b.clone()];
    let phi = WeightVector::new(f.system.alphabet().clone(), values.to_vec())?;
    let (bound, cell) = exhaustive_cell(&f.system, &phi, &Caps::default())?;
    println!("brute  bound {bound}, {} elements", cell.len());
    Ok(())
}
