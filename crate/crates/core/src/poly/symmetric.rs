//! Symmetric-function constructors over a chosen subset of the variables.

use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// `e_i(x_{j_1}^r, …, x_{j_m}^r)` for the variables `indices` of an
/// `nvars`-variable ring.
pub fn elementary_symmetric_in(
    nvars: usize,
    indices: &[usize],
    i: usize,
    power: u32,
) -> Result<Polynomial> {
    if i == 0 || i > indices.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: indices.len(),
        });
    }
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    fn rec(
        start: usize,
        left: usize,
        indices: &[usize],
        chosen: &mut Vec<usize>,
        nvars: usize,
        power: u32,
        out: &mut Vec<(Monomial, Scalar)>,
    ) {
        if left == 0 {
            let mut exps = vec![0; nvars];
            for &j in chosen.iter() {
                exps[j] = power;
            }
            out.push((Monomial::new(exps), Scalar::one()));
            return;
        }
        for k in start..=indices.len() - left {
            chosen.push(indices[k]);
            rec(k + 1, left - 1, indices, chosen, nvars, power, out);
            chosen.pop();
        }
    }
    rec(0, i, indices, &mut chosen, nvars, power, &mut terms);
    Ok(Polynomial::from_terms(nvars, terms))
}

/// `e_i(x_1^r, …, x_n^r)` over all variables.
pub fn elementary_symmetric(nvars: usize, i: usize, power: u32) -> Result<Polynomial> {
    let all: Vec<usize> = (0..nvars).collect();
    elementary_symmetric_in(nvars, &all, i, power)
}

/// `p_d = Σ x_j^d` over the variables `indices`.
pub fn power_sum_in(nvars: usize, indices: &[usize], d: u32) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        indices
            .iter()
            .map(|&j| (Monomial::var_pow(nvars, j, d), Scalar::one())),
    )
}

pub fn power_sum(nvars: usize, d: u32) -> Polynomial {
    let all: Vec<usize> = (0..nvars).collect();
    power_sum_in(nvars, &all, d)
}

/// `h_d`: sum of all degree-`d` monomials in the variables `indices`.
pub fn complete_homogeneous_in(nvars: usize, indices: &[usize], d: u32) -> Polynomial {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(
        k: usize,
        left: u32,
        indices: &[usize],
        exps: &mut Vec<u32>,
        out: &mut Vec<(Monomial, Scalar)>,
    ) {
        if k + 1 >= indices.len() {
            if let Some(&j) = indices.get(k) {
                exps[j] = left;
                out.push((Monomial::new(exps.clone()), Scalar::one()));
                exps[j] = 0;
            } else if left == 0 {
                out.push((Monomial::new(exps.clone()), Scalar::one()));
            }
            return;
        }
        for e in 0..=left {
            exps[indices[k]] = e;
            rec(k + 1, left - e, indices, exps, out);
        }
        exps[indices[k]] = 0;
    }
    rec(0, d, indices, &mut exps, &mut terms);
    Polynomial::from_terms(nvars, terms)
}

pub fn complete_homogeneous(nvars: usize, d: u32) -> Polynomial {
    let all: Vec<usize> = (0..nvars).collect();
    complete_homogeneous_in(nvars, &all, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableSet;

    fn xyz() -> VariableSet {
        VariableSet::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let v = xyz();
        let p = |s: &str| v.parse(s).unwrap();
        assert_eq!(elementary_symmetric(3, 1, 1).unwrap(), p("x+y+z"));
        assert_eq!(
            elementary_symmetric(3, 2, 2).unwrap(),
            p("x^2*y^2 + x^2*z^2 + y^2*z^2")
        );
        assert_eq!(elementary_symmetric(3, 3, 1).unwrap(), p("x*y*z"));
        assert!(matches!(
            elementary_symmetric(3, 4, 1),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        ));
        assert!(elementary_symmetric(3, 0, 1).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let v = xyz();
        assert_eq!(power_sum(3, 1), v.parse("x+y+z").unwrap());
        assert_eq!(power_sum(3, 2), v.parse("x^2+y^2+z^2").unwrap());
        let w = VariableSet::new(&["x", "y"]).unwrap();
        assert_eq!(power_sum(2, 3), w.parse("x^3+y^3").unwrap());
    }

    #[test]
    fn complete_homogeneous_examples() {
        let v = xyz();
        assert_eq!(complete_homogeneous(3, 0), Polynomial::one(3));
        assert_eq!(
            complete_homogeneous_in(3, &[0, 2], 2),
            v.parse("x^2 + x*z + z^2").unwrap()
        );
        assert_eq!(complete_homogeneous(3, 1), v.parse("x+y+z").unwrap());
        assert_eq!(complete_homogeneous(3, 3).terms().len(), 10);
    }

    #[test]
    fn newton_type_identity_for_three_variables() {
        // e_3 - z e_2 + z^2 e_1 = z^3
        let v = xyz();
        let z = v.parse("z").unwrap();
        let e = |i| elementary_symmetric(3, i, 1).unwrap();
        let lhs = e(3).sub(&z.mul(&e(2))).add(&z.pow(2).mul(&e(1)));
        assert_eq!(lhs, z.pow(3));
    }

    #[test]
    fn power_sum_relation_a_equals_one() {
        // z f - xy p_1 + (x+y) p_2 - p_3 = 0 with f = (x-z)(y-z)
        let v = xyz();
        let p = |s: &str| v.parse(s).unwrap();
        let f = p("(x-z)*(y-z)");
        let lhs = p("z")
            .mul(&f)
            .sub(&p("x*y").mul(&power_sum(3, 1)))
            .add(&p("x+y").mul(&power_sum(3, 2)))
            .sub(&power_sum(3, 3));
        assert!(lhs.is_zero());
    }
}
