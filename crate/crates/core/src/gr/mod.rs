//! The associated graded algebra `Gr_(z)(A) ≅ R/In′(I)`.
//!
//! `In′(I)` is generated by the lowest `x_n`-adic parts of a reduced grevlex
//! basis with `x_n` last. Under grevlex the leading monomial of `g` is the
//! leading monomial of its lowest `x_n`-adic part, so the generated ideal has
//! the same initial ideal as `I`, hence the same Hilbert function as the true
//! `In′(I)`, which it is contained in; so they are equal. Every call checks
//! the Hilbert function equality.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::artinian::{ArtinianAlgebra, LinearForm};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::jordan::{jordan_profile, JordanProfile};
use crate::lefschetz::{find_witness, Property, SearchParams, Status};
use crate::linalg::{Matrix, Scalar};
use crate::poly::{MonomialOrder, Polynomial};

/// Linear change of variables; row `j` of `forward` is the image of `x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    pub forward: Matrix,
    pub inverse: Matrix,
}

impl CoordinateChange {
    pub fn is_identity(&self) -> bool {
        self.forward == Matrix::identity(self.forward.rows())
    }

    /// Image of a linear form under the substitution.
    pub fn apply_form(&self, g: &LinearForm) -> LinearForm {
        let n = g.nvars();
        let mut coeffs = vec![Scalar::zero(); n];
        for (j, c) in g.coeffs().iter().enumerate() {
            for (i, slot) in coeffs.iter_mut().enumerate() {
                *slot += c * &self.forward[(j, i)];
            }
        }
        LinearForm::new(coeffs)
    }
}

/// Substitution sending `z` to the last variable. The pivot is the last
/// variable with a nonzero coefficient in `z`.
pub fn normalize_z(ideal: &IdealHandle, z: &LinearForm) -> Result<(IdealHandle, CoordinateChange)> {
    let n = ideal.nvars();
    if z.nvars() != n {
        return Err(Error::RingMismatch);
    }
    let p = z
        .coeffs()
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::ZeroLinearForm)?;
    let last = n - 1;
    // ψ(x_j) = x_σ(j) for j ≠ p with σ swapping p and n, and
    // ψ(x_p) = (x_n − Σ_{j≠p} c_j ψ(x_j)) / c_p
    let target = |j: usize| if j == last { p } else { j };
    let mut forward = Matrix::zeros(n, n);
    let cp = z.coeffs()[p].clone();
    for j in 0..n {
        if j != p {
            forward[(j, target(j))] = Scalar::one();
        }
    }
    forward[(p, last)] = cp.recip();
    for j in 0..n {
        if j != p && !z.coeffs()[j].is_zero() {
            let t = target(j);
            forward[(p, t)] -= &z.coeffs()[j] / &cp;
        }
    }
    let inverse = forward.inverse().ok_or(Error::SingularMatrix)?;
    let change = CoordinateChange { forward, inverse };
    debug_assert_eq!(change.apply_form(z), LinearForm::variable(n, last));
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute_linear(&change.forward))
        .collect::<Result<_>>()?;
    Ok((IdealHandle::new(ideal.vars().clone(), gens)?, change))
}

/// `In′(I)` with the last variable distinguished.
pub fn in_prime_ideal(ideal: &IdealHandle) -> Result<IdealHandle> {
    let gb = ideal.grevlex();
    let gens: Vec<Polynomial> = gb
        .elements()
        .iter()
        .map(Polynomial::in_prime_part)
        .collect::<Result<_>>()?;
    let result = IdealHandle::new(ideal.vars().clone(), gens)?;
    let lt = result.leading_term_ideal(MonomialOrder::Grevlex);
    assert!(
        lt.equals(&ideal.leading_term_ideal(MonomialOrder::Grevlex))?,
        "In(In′(I)) differs from In(I)"
    );
    Ok(result)
}

/// `Gr_(z)(A)` in normalized coordinates, where `z` becomes the last
/// variable `z*`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub algebra: ArtinianAlgebra,
    pub change: CoordinateChange,
    pub z_star: LinearForm,
}

impl GradedAlgebra {
    /// Initial form in `Gr` of a linear form of `A`: its class modulo `z`
    /// when it is not a multiple of `z`.
    pub fn initial_form(&self, g: &LinearForm) -> LinearForm {
        let image = self.change.apply_form(g);
        let n = image.nvars();
        let mut coeffs = image.coeffs().to_vec();
        if coeffs[..n - 1].iter().any(|c| !c.is_zero()) {
            coeffs[n - 1] = Scalar::zero();
        }
        LinearForm::new(coeffs)
    }
}

pub fn gr_algebra(a: &ArtinianAlgebra, z: &LinearForm) -> Result<GradedAlgebra> {
    let (normalized, change) = normalize_z(a.ideal(), z)?;
    let gr = ArtinianAlgebra::build(in_prime_ideal(&normalized)?)?;
    assert_eq!(
        gr.hilbert(),
        a.hilbert(),
        "Gr_(z)(A) changed the Hilbert function"
    );
    let n = a.nvars();
    Ok(GradedAlgebra {
        algebra: gr,
        change,
        z_star: LinearForm::variable(n, n - 1),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Remark37Report {
    pub algebra: JordanProfile,
    pub graded: JordanProfile,
    pub equal: bool,
}

/// `×z` on `A` and `×z*` on `Gr_(z)(A)` have the same Jordan type.
pub fn verify_remark37(a: &ArtinianAlgebra, z: &LinearForm) -> Result<Remark37Report> {
    let gr = gr_algebra(a, z)?;
    let algebra = jordan_profile(a, z)?;
    let graded = jordan_profile(&gr.algebra, &gr.z_star)?;
    let equal = algebra.blocks == graded.blocks;
    Ok(Remark37Report {
        algebra,
        graded,
        equal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Agreement {
    Consistent,
    /// One side has a witness, the other no witness among the candidates
    /// and no certificate either.
    Undecided,
    Contradiction,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyComparison {
    pub property: Property,
    pub algebra: String,
    pub graded: String,
    pub agreement: Agreement,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Report {
    pub comparisons: Vec<PropertyComparison>,
    pub note: &'static str,
}

impl Theorem1Report {
    pub fn has_contradiction(&self) -> bool {
        self.comparisons
            .iter()
            .any(|c| c.agreement == Agreement::Contradiction)
    }
}

fn status_name(s: &Status) -> String {
    match s {
        Status::Witness { .. } => "witness".into(),
        Status::DefinitelyNo { .. } => "definitely_no".into(),
        Status::NoWitnessFound { .. } => "no_witness_found".into(),
    }
}

/// WLP/SLP verdicts on `A` and on `Gr_(z)(A)` for the given `z`.
pub fn verify_theorem1(
    a: &ArtinianAlgebra,
    z: &LinearForm,
    params: &SearchParams,
) -> Result<Theorem1Report> {
    let gr = gr_algebra(a, z)?;
    let mut comparisons = Vec::new();
    for property in [Property::Wlp, Property::Slp] {
        let va = find_witness(a, property, params);
        let vg = find_witness(&gr.algebra, property, params);
        let agreement = match (va.is_witness(), vg.is_witness()) {
            (true, true) | (false, false) => Agreement::Consistent,
            _ if va.is_definitely_no() || vg.is_definitely_no() => {
                // Gr having the property forces A to have it
                if vg.is_witness() {
                    Agreement::Contradiction
                } else {
                    Agreement::Undecided
                }
            }
            _ => Agreement::Undecided,
        };
        comparisons.push(PropertyComparison {
            property,
            algebra: status_name(&va.status),
            graded: status_name(&vg.status),
            agreement,
        });
    }
    Ok(Theorem1Report {
        comparisons,
        note: "checked for the given z only; other linear forms are not quantified",
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertTriple {
    pub algebra: Vec<usize>,
    pub initial: Vec<usize>,
    pub graded: Vec<usize>,
    pub equal: bool,
}

/// `R/I`, `R/In(I)` and `Gr_(z)(R/I)` have the same Hilbert function.
pub fn hilbert_triple_check(ideal: &IdealHandle, z: &LinearForm) -> Result<HilbertTriple> {
    let a = ArtinianAlgebra::build(ideal.clone())?;
    let initial = ArtinianAlgebra::build(ideal.leading_term_ideal(MonomialOrder::Grevlex))?;
    let (normalized, _) = normalize_z(ideal, z)?;
    let graded = ArtinianAlgebra::build(in_prime_ideal(&normalized)?)?;
    let equal = a.dims() == initial.dims() && a.dims() == graded.dims();
    Ok(HilbertTriple {
        algebra: a.dims(),
        initial: initial.dims(),
        graded: graded.dims(),
        equal,
    })
}

#[cfg(test)]
mod tests;
