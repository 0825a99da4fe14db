//! Exact scalars and polynomial algebra.

mod error;
mod mpoly;
mod numfield;
mod poly;
mod rational;
mod ring;
mod roots;

pub use error::ExactError;
pub use mpoly::{bivariate_resultant, BivariatePolynomial, MPoly};
pub use numfield::{nf_solve_quadratic, nf_sqrt, quadratic_modulus, square_split, sqrt_in, Nf, NumberFieldElement, QPoly};
pub use poly::{multiplicity_profile, poly_gcd, resultant, Polynomial};
pub use rational::Rational;
pub use ring::{Domain, Field, Ring};
pub use roots::{rational_roots, solve_polynomial, Root};
