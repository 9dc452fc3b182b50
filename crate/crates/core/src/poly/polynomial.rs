use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Ordered, distinct variable names. Position 0 is the largest variable;
/// the last one is the distinguished `x_n` of grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidVariables("no variables declared".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidVariables(format!(
                    "`{n}` is not an identifier"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidVariables(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VariableSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Appends a variable, renaming with a numeric suffix on clash.
    pub fn with_appended(&self, name: &str) -> (VariableSet, String) {
        let mut fresh = name.to_string();
        let mut k = 1;
        while self.names.contains(&fresh) {
            fresh = format!("{name}_{k}");
            k += 1;
        }
        let mut names = self.names.clone();
        names.push(fresh.clone());
        (VariableSet { names }, fresh)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self.len(), i))
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        super::parse::parse(text, self)
    }
}

/// Sparse polynomial with exact coefficients. Terms are kept strictly
/// decreasing in grevlex with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial { nvars, terms }
    }

    /// Canonicalizes arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            *acc.entry(m).or_insert_with(Scalar::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.compare(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading term under grevlex.
    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Common degree of all terms, when there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match MonomialOrder::Grevlex.compare(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Scalar::one())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by a monomial preserves term order.
    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .fold(Polynomial::zero(self.nvars), |acc, (m, c)| {
                acc.add(&large.mul_monomial(m, c))
            })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Exact division by a nonzero polynomial, `None` if it does not divide.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c / lc;
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc));
            quot = quot.add(&Polynomial::monomial(qm, qc));
        }
        Some(quot)
    }

    /// The lowest `x_n`-adic part: writing `f = Σ f_j x_n^j` with `f_j` free of
    /// `x_n`, returns `f_j x_n^j` for the least `j` with `f_j ≠ 0`.
    pub fn in_prime_part(&self) -> Result<Polynomial> {
        let last = self.nvars.checked_sub(1).ok_or(Error::ZeroPolynomial)?;
        let j = self
            .terms
            .iter()
            .map(|(m, _)| m.exps()[last])
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exps()[last] == j)
                .cloned()
                .collect(),
        })
    }

    /// Replaces `x_j` by `Σ_i m[j][i] x_i`. `m` must be invertible.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Polynomial> {
        let n = self.nvars;
        if m.rows() != n || m.cols() != n {
            return Err(Error::RingMismatch);
        }
        if m.rank() != n {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..n).map(|j| Polynomial::linear(m.row(j))).collect();
        Ok(self.substitute(&images))
    }

    /// Replaces `x_j` by `images[j]` (images may live in another ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, Polynomial::nvars);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(target);
        for (mono, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (j, &e) in mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap().mul(&images[j]);
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][e as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Re-embeds into a ring with `extra` trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars + extra,
            self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())),
        )
    }

    /// Re-embeds into a ring with `extra` leading variables.
    pub fn prepend_vars(&self, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars + extra,
            self.terms
                .iter()
                .map(|(m, c)| (m.prepend(extra), c.clone())),
        )
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.exps()[i] > 0)
                .map(|(m, c)| {
                    let e = m.exps()[i];
                    let mut exps = m.exps().to_vec();
                    exps[i] -= 1;
                    (Monomial::new(exps), c * Scalar::from_integer(e.into()))
                }),
        )
    }

    /// Applies the differential operator `∂^m` to `self`.
    pub fn differentiate_by(&self, m: &Monomial) -> Polynomial {
        let mut out = self.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                if out.is_zero() {
                    return out;
                }
                out = out.derivative(i);
            }
        }
        out
    }

    /// Coordinates of a homogeneous polynomial in a given monomial basis.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); basis.len()];
        for (m, c) in &self.terms {
            let k = basis
                .iter()
                .position(|b| b == m)
                .expect("term outside the coordinate basis");
            v[k] = c.clone();
        }
        v
    }

    pub fn from_coordinates(nvars: usize, basis: &[Monomial], coords: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(nvars, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, vars }
    }

    pub fn to_string_in(&self, vars: &VariableSet) -> String {
        self.display(vars).to_string()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let vars = VariableSet { names };
        write!(f, "{}", self.display(&vars))
    }
}

/// Canonical printer: decreasing grevlex, explicit `*` and `^`.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a VariableSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let negative = c < &Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn xyz() -> VariableSet {
        VariableSet::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn variable_set_validation() {
        assert!(VariableSet::new::<&str>(&[]).is_err());
        assert!(VariableSet::new(&["x", "x"]).is_err());
        assert!(VariableSet::new(&["1x"]).is_err());
        let (v, name) = xyz().with_appended("x");
        assert_eq!(name, "x_1");
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn arithmetic_identities() {
        let v = xyz();
        let f = v.parse("x^2 - 3*y*z + 1/2*z^2").unwrap();
        assert_eq!(f.mul(&Polynomial::zero(3)), Polynomial::zero(3));
        assert_eq!(f.mul(&Polynomial::one(3)), f);
        assert_eq!(f.sub(&f), Polynomial::zero(3));
        assert_eq!(
            v.parse("x+y").unwrap().pow(2),
            v.parse("x^2 + 2*x*y + y^2").unwrap()
        );
    }

    #[test]
    fn printing() {
        let v = xyz();
        let f = v.parse("-x^2 + 2*x*y - 3/2*y^2 - z + 4").unwrap();
        assert_eq!(f.to_string_in(&v), "-x^2 + 2*x*y - 3/2*y^2 - z + 4");
        assert_eq!(Polynomial::zero(3).to_string_in(&v), "0");
        assert_eq!(Polynomial::constant(3, int(-1)).to_string_in(&v), "-1");
    }

    #[test]
    fn in_prime_examples() {
        let v = xyz();
        let p = |s: &str| v.parse(s).unwrap();
        assert_eq!(
            p("(x+y+z)^2").in_prime_part().unwrap(),
            p("x^2 + 2*x*y + y^2")
        );
        assert_eq!(p("z^3").in_prime_part().unwrap(), p("z^3"));
        assert_eq!(p("x*z + z^2").in_prime_part().unwrap(), p("x*z"));
        assert_eq!(
            Polynomial::zero(3).in_prime_part(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn substitution_examples() {
        let v = VariableSet::new(&["x", "y"]).unwrap();
        let p = |s: &str| v.parse(s).unwrap();
        let f = p("x^3 - 2*x*y + y^2");
        assert_eq!(f.substitute_linear(&Matrix::identity(2)).unwrap(), f);
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(p("x^2").substitute_linear(&swap).unwrap(), p("y^2"));
        // x -> x, y -> y - x sends x + y to y
        let m = Matrix::from_i64(&[&[1, 0], &[-1, 1]]);
        assert_eq!(p("x + y").substitute_linear(&m).unwrap(), p("y"));
        let singular = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(f.substitute_linear(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn exact_division() {
        let v = xyz();
        let p = |s: &str| v.parse(s).unwrap();
        assert_eq!(p("x^2 - y^2").exact_div(&p("x - y")), Some(p("x + y")));
        assert_eq!(p("x^2 + y^2").exact_div(&p("x - y")), None);
    }

    #[test]
    fn derivatives() {
        let v = xyz();
        let p = |s: &str| v.parse(s).unwrap();
        assert_eq!(p("x^3*y + z").derivative(0), p("3*x^2*y"));
        let m = Monomial::new(vec![2, 1, 0]);
        assert_eq!(p("x^3*y").differentiate_by(&m), p("6*x"));
    }
}
