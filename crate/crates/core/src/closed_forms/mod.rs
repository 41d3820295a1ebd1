//! Closed-form bounds and cells for spherical types, and the boundedness
//! cones of the affine types with non-constant weight functions.

mod affine;
mod spherical;

pub use affine::{affine_cone, generic_affine_cone, AffineConeSpec, AffineFamily};
pub use spherical::{
    bn_bound, bn_forms, dihedral_bound, exhaustive_cell, f4_bound, spherical_nonneg,
    spherical_nonpos, SphericalFormulaResult, F4_FORMS, F4_SET_A,
};
