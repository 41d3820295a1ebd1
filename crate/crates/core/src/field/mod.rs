//! Exact arithmetic: rationals and the real cyclotomic fields `Q(2cos(pi/M))`.

pub mod cyclo;
pub mod rational;

pub use cyclo::{embed_2cos, minimal_polynomial_of_2cos, CycloField, CycloReal};
pub use rational::{int, parse_rational, ratio, Rational};
