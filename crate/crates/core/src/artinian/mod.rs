//! The graded quotient `A = R/I` as a finite-dimensional object.

mod apolar;
mod hilbert;

pub use apolar::{apolar_algebra, apolar_ideal, catalecticant_ranks};
pub use hilbert::HilbertSeries;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GBasis, IdealHandle};
use crate::linalg::{Matrix, Scalar};
use crate::poly::{Monomial, Polynomial, VariableSet};

/// Linear form `Σ c_i x_i` in `A_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        LinearForm::new(
            coeffs
                .iter()
                .map(|&c| Scalar::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); nvars];
        coeffs[i] = Scalar::one();
        LinearForm { coeffs }
    }

    pub fn all_ones(nvars: usize) -> Self {
        LinearForm {
            coeffs: vec![Scalar::one(); nvars],
        }
    }

    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        let n = f.nvars();
        let mut coeffs = vec![Scalar::zero(); n];
        for (m, c) in f.terms() {
            if m.degree() != 1 {
                return Err(Error::NonHomogeneousInput(format!(
                    "expected a linear form, found {f:?}"
                )));
            }
            let i = m.exps().iter().position(|&e| e == 1).expect("degree one");
            coeffs[i] = c.clone();
        }
        Ok(LinearForm { coeffs })
    }

    pub fn parse(vars: &VariableSet, text: &str) -> Result<Self> {
        Self::from_polynomial(&vars.parse(text)?)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.coeffs)
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    /// Re-embeds into a ring with `extra` trailing variables.
    pub fn extend(&self, extra: usize) -> LinearForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_n(Scalar::zero(), extra));
        LinearForm { coeffs }
    }

    pub fn to_string_in(&self, vars: &VariableSet) -> String {
        self.to_polynomial().to_string_in(vars)
    }
}

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

/// `R/(I : z^k)`, or the zero ring when the colon is the unit ideal.
#[derive(Clone, Debug)]
pub enum ColonQuotient {
    Algebra(Box<ArtinianAlgebra>),
    Zero,
}

impl ColonQuotient {
    pub fn algebra(&self) -> Option<&ArtinianAlgebra> {
        match self {
            ColonQuotient::Algebra(a) => Some(a),
            ColonQuotient::Zero => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ColonQuotient::Zero)
    }
}

/// Standard graded Artinian quotient with per-degree standard-monomial bases
/// (decreasing grevlex within each degree) and multiplication tables for the
/// variables.
#[derive(Clone)]
pub struct ArtinianAlgebra {
    vars: VariableSet,
    ideal: IdealHandle,
    gb: Arc<GBasis>,
    basis: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
    hilbert: HilbertSeries,
    var_maps: Vec<Vec<Matrix>>,
}

impl fmt::Debug for ArtinianAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArtinianAlgebra")
            .field("vars", &self.vars.names())
            .field("hilbert", &self.hilbert.coeffs())
            .finish()
    }
}

/// Summary used in reports.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub variables: Vec<String>,
    pub hilbert: Vec<usize>,
    pub dim: usize,
    pub socle_degree: usize,
}

impl ArtinianAlgebra {
    pub fn build(ideal: IdealHandle) -> Result<Self> {
        let vars = ideal.vars().clone();
        let n = vars.len();
        let gb = ideal.grevlex();
        if gb.is_unit() {
            return Err(Error::ZeroAlgebra);
        }
        for i in 0..n {
            let has_power = gb
                .leading_monomials()
                .iter()
                .any(|m| m.pure_power_var() == Some(i));
            if !has_power {
                return Err(Error::NotArtinian(vars.names()[i].clone()));
            }
        }

        let mut basis: Vec<Vec<Monomial>> = vec![vec![Monomial::one(n)]];
        loop {
            let last = basis.last().unwrap();
            let mut next: Vec<Monomial> = Vec::new();
            for m in last {
                for j in 0..n {
                    let c = m.mul(&Monomial::var(n, j));
                    if gb.is_standard(&c) && !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by(|a, b| crate::poly::MonomialOrder::Grevlex.compare(b, a));
            basis.push(next);
        }
        let mut index = HashMap::new();
        for level in &basis {
            for (k, m) in level.iter().enumerate() {
                index.insert(m.clone(), k);
            }
        }
        let hilbert = HilbertSeries::from_dims(&basis.iter().map(Vec::len).collect::<Vec<_>>());

        let mut alg = ArtinianAlgebra {
            vars,
            ideal,
            gb,
            basis,
            index,
            hilbert,
            var_maps: Vec::new(),
        };
        alg.var_maps = (0..n)
            .map(|j| {
                (0..alg.basis.len())
                    .map(|d| {
                        let cols: Vec<Vec<Scalar>> = alg.basis[d]
                            .iter()
                            .map(|m| {
                                let p = Polynomial::monomial(
                                    m.mul(&Monomial::var(n, j)),
                                    Scalar::one(),
                                );
                                alg.coordinates_unchecked(&p, d + 1)
                            })
                            .collect();
                        Matrix::from_columns(alg.dim_in(d + 1), &cols)
                    })
                    .collect()
            })
            .collect();
        Ok(alg)
    }

    /// Parses generators over the given variables and builds the quotient.
    pub fn from_strings<S: AsRef<str>>(vars: &[&str], gens: &[S]) -> Result<Self> {
        let vars = VariableSet::new(vars)?;
        Self::build(IdealHandle::parse(&vars, gens)?)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }

    pub fn groebner(&self) -> &GBasis {
        &self.gb
    }

    pub fn hilbert(&self) -> &HilbertSeries {
        &self.hilbert
    }

    /// Largest degree with `A_c ≠ 0`.
    pub fn socle_degree(&self) -> usize {
        self.basis.len() - 1
    }

    /// `σ(A) = c + 1`.
    pub fn sigma(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn dim_in(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.basis.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn summary(&self) -> AlgebraSummary {
        AlgebraSummary {
            variables: self.vars.names().to_vec(),
            hilbert: self.dims(),
            dim: self.dim(),
            socle_degree: self.socle_degree(),
        }
    }

    fn coordinates_unchecked(&self, f: &Polynomial, d: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim_in(d)];
        if d > self.socle_degree() {
            return v;
        }
        let nf = self.gb.normal_form(f);
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Coordinates of a homogeneous polynomial of degree `d` in `A_d`.
    pub fn coordinates(&self, f: &Polynomial) -> Result<(usize, Vec<Scalar>)> {
        if f.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        let d = f
            .homogeneous_degree()
            .ok_or_else(|| Error::NonHomogeneousInput(f.to_string_in(&self.vars)))?;
        Ok((d as usize, self.coordinates_unchecked(f, d as usize)))
    }

    /// Polynomial representative of a degree-`d` coordinate vector.
    pub fn lift(&self, d: usize, coords: &[Scalar]) -> Polynomial {
        Polynomial::from_coordinates(self.nvars(), self.basis(d), coords)
    }

    /// Matrix of `×x_j: A_d → A_{d+1}`.
    pub fn variable_map(&self, j: usize, d: usize) -> Matrix {
        match self.var_maps[j].get(d) {
            Some(m) => m.clone(),
            None => Matrix::zeros(0, 0),
        }
    }

    /// Matrix of `×g: A_d → A_{d+1}`.
    pub fn linear_map(&self, g: &LinearForm, d: usize) -> Matrix {
        assert_eq!(g.nvars(), self.nvars(), "ring mismatch");
        let mut out = Matrix::zeros(self.dim_in(d + 1), self.dim_in(d));
        if d > self.socle_degree() {
            return out;
        }
        for (j, c) in g.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.var_maps[j][d].scale(c));
            }
        }
        out
    }

    /// `×g: A_d → A_{d+1}` for every `d = 0..=c`.
    pub fn linear_maps(&self, g: &LinearForm) -> Vec<Matrix> {
        (0..=self.socle_degree())
            .map(|d| self.linear_map(g, d))
            .collect()
    }

    /// `×g^k: A_d → A_{d+k}` for every `d = 0..=c`, by composing the
    /// degree-one maps.
    pub fn power_maps(&self, g: &LinearForm, k: usize) -> Vec<Matrix> {
        compose_powers(&self.linear_maps(g), &self.dims(), k)
    }

    /// Degreewise matrices of `×f` for a homogeneous `f`, computed by normal
    /// forms of `f·m`.
    pub fn mult_map(&self, f: &Polynomial) -> Result<Vec<Matrix>> {
        if f.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        let c = self.socle_degree();
        if f.is_zero() {
            return Ok((0..=c)
                .map(|d| Matrix::zeros(self.dim_in(d), self.dim_in(d)))
                .collect());
        }
        let k = f
            .homogeneous_degree()
            .ok_or_else(|| Error::NonHomogeneousInput(f.to_string_in(&self.vars)))?
            as usize;
        Ok((0..=c)
            .map(|d| {
                let cols: Vec<Vec<Scalar>> = self.basis[d]
                    .iter()
                    .map(|m| {
                        let p = f.mul_monomial(m, &Scalar::one());
                        self.coordinates_unchecked(&p, d + k)
                    })
                    .collect();
                Matrix::from_columns(self.dim_in(d + k), &cols)
            })
            .collect())
    }

    /// Exact ranks of `×g^k`: the total and the per-degree ranks.
    pub fn rank_of_power(&self, g: &LinearForm, k: usize) -> (usize, Vec<usize>) {
        let ranks: Vec<usize> = self.power_maps(g, k).iter().map(Matrix::rank).collect();
        (ranks.iter().sum(), ranks)
    }

    /// `dim A/gA = dim A − rank(×g)`.
    pub fn dim_quotient_by(&self, g: &LinearForm) -> usize {
        self.dim() - self.rank_of_power(g, 1).0
    }

    /// Per-degree bases of `0 : m`, the socle.
    pub fn socle(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..=self.socle_degree())
            .map(|d| {
                let dim = self.dim_in(d);
                if d == self.socle_degree() {
                    return (0..dim)
                        .map(|k| {
                            let mut v = vec![Scalar::zero(); dim];
                            v[k] = Scalar::one();
                            v
                        })
                        .collect();
                }
                let mut rows: Vec<Vec<Scalar>> = Vec::new();
                for j in 0..self.nvars() {
                    let m = &self.var_maps[j][d];
                    for i in 0..m.rows() {
                        rows.push(m.row(i).to_vec());
                    }
                }
                Matrix::from_rows(rows).kernel_basis()
            })
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle().iter().map(Vec::len).collect()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dims().iter().sum::<usize>() == 1
    }

    /// `R/(I : z^k)` with `z` lifted to the literal linear polynomial.
    pub fn quotient_by_colon(&self, z: &LinearForm, k: u32) -> Result<ColonQuotient> {
        if k == 0 {
            return Ok(ColonQuotient::Algebra(Box::new(self.clone())));
        }
        let colon = self.ideal.colon_power(&z.to_polynomial(), k)?;
        if colon.is_unit() {
            return Ok(ColonQuotient::Zero);
        }
        Ok(ColonQuotient::Algebra(Box::new(ArtinianAlgebra::build(
            colon,
        )?)))
    }

    /// `A[u]/(u^α)` with a fresh trailing variable (renamed on clash).
    pub fn tensor_truncated(&self, alpha: u32) -> Result<ArtinianAlgebra> {
        if alpha == 0 {
            return Err(Error::Malformed(
                "truncation length must be positive".into(),
            ));
        }
        let (vars, _) = self.vars.with_appended("u");
        let n = vars.len();
        let mut gens: Vec<Polynomial> = self
            .ideal
            .generators()
            .iter()
            .map(|g| g.extend_vars(1))
            .collect();
        gens.push(Polynomial::monomial(
            Monomial::var_pow(n, n - 1, alpha),
            Scalar::one(),
        ));
        ArtinianAlgebra::build(IdealHandle::new(vars, gens)?)
    }

    /// Quotient `A/(f)` for a homogeneous `f`.
    pub fn quotient_by(&self, extra: &[Polynomial]) -> Result<ArtinianAlgebra> {
        ArtinianAlgebra::build(self.ideal.with_generators(extra)?)
    }
}

/// `×g^k` on each degree from the degree-one maps `maps[d]: V_d → V_{d+1}`.
pub(crate) fn compose_powers(maps: &[Matrix], dims: &[usize], k: usize) -> Vec<Matrix> {
    let top = dims.len();
    (0..top)
        .map(|d| {
            let mut acc = Matrix::identity(dims[d]);
            for step in 0..k {
                let src = d + step;
                let next_dim = dims.get(src + 1).copied().unwrap_or(0);
                if src >= top || acc.rows() == 0 {
                    acc = Matrix::zeros(next_dim, dims[d]);
                    continue;
                }
                acc = maps[src].mul(&acc);
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests;
