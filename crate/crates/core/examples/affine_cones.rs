use weightcell::closed_forms::{affine_cone, generic_affine_cone, AffineFamily};
use weightcell::Caps;

fn main() -> weightcell::Result<()> {
    for family in [AffineFamily::Ct(2), AffineFamily::Bt(3), AffineFamily::Gt2, AffineFamily::Bt(4), AffineFamily::Ct(3)] {
        let spec = affine_cone(family)?;
        let shown: Vec<String> = spec.normals.iter().map(|n| spec.format_normal(n)).collect();
        let generic = generic_affine_cone(&spec, &Caps::default())?;
        println!("{family}: {}  (generic agrees: {})", shown.join(", "), generic.same_cone(&spec.hrep()?)?);
    }
    Ok(())
}
