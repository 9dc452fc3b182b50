//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod parse;
mod polynomial;
mod symmetric;

pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use polynomial::{PolyDisplay, Polynomial, VariableSet};
pub use symmetric::{
    complete_homogeneous, complete_homogeneous_in, elementary_symmetric, elementary_symmetric_in,
    power_sum, power_sum_in,
};
