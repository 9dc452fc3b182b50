//! Apolar algebras `R/Ann(F)` via Macaulay's inverse system, using true
//! partial derivatives.

use num_traits::One;

use super::ArtinianAlgebra;
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::linalg::{Matrix, Scalar};
use crate::poly::{monomials_of_degree, Polynomial, VariableSet};

fn form_degree(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.homogeneous_degree()
        .ok_or_else(|| Error::NonHomogeneousInput(format!("{f:?}")))
}

/// Catalecticant `R_d → R_{e−d}`, `m ↦ m(∂)F`, in monomial bases.
fn catalecticant(f: &Polynomial, d: u32) -> Matrix {
    let n = f.nvars();
    let e = f.homogeneous_degree().expect("homogeneous");
    let source = monomials_of_degree(n, d);
    let target = monomials_of_degree(n, e - d);
    let cols: Vec<Vec<Scalar>> = source
        .iter()
        .map(|m| f.differentiate_by(m).coordinates(&target))
        .collect();
    Matrix::from_columns(target.len(), &cols)
}

/// Ranks of the catalecticant maps for `d = 0..=deg F`; these are the
/// Hilbert function of `R/Ann(F)`.
pub fn catalecticant_ranks(f: &Polynomial) -> Result<Vec<usize>> {
    let e = form_degree(f)?;
    Ok((0..=e).map(|d| catalecticant(f, d).rank()).collect())
}

/// `Ann(F)`, trimmed to a minimal generating set.
pub fn apolar_ideal(vars: &VariableSet, f: &Polynomial) -> Result<IdealHandle> {
    if f.nvars() != vars.len() {
        return Err(Error::RingMismatch);
    }
    let e = form_degree(f)?;
    let n = vars.len();
    let mut gens: Vec<Polynomial> = Vec::new();
    for d in 1..=e {
        let source = monomials_of_degree(n, d);
        for v in catalecticant(f, d).kernel_basis() {
            gens.push(Polynomial::from_coordinates(n, &source, &v));
        }
    }
    for m in monomials_of_degree(n, e + 1) {
        gens.push(Polynomial::monomial(m, Scalar::one()));
    }
    let full = IdealHandle::new(vars.clone(), gens)?;
    IdealHandle::new(vars.clone(), full.minimal_generating_set())
}

/// `R/Ann(F)`: Gorenstein with socle degree `deg F`.
pub fn apolar_algebra(vars: &VariableSet, f: &Polynomial) -> Result<ArtinianAlgebra> {
    ArtinianAlgebra::build(apolar_ideal(vars, f)?)
}
