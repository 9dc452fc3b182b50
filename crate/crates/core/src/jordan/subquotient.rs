use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::artinian::{ArtinianAlgebra, HilbertSeries, LinearForm};
use crate::groebner::IdealHandle;
use crate::lefschetz::GradedModule;
use crate::linalg::{Matrix, RowSpan, Scalar};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, VariableSet};

/// Homogeneous subspace of an algebra, one echelon span per degree.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    pieces: Vec<RowSpan>,
}

impl GradedSubspace {
    pub fn new(pieces: Vec<RowSpan>) -> Self {
        GradedSubspace { pieces }
    }

    pub fn piece(&self, d: usize) -> Option<&RowSpan> {
        self.pieces.get(d)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(RowSpan::dim).collect()
    }

    pub fn contains(&self, other: &GradedSubspace) -> bool {
        self.pieces
            .iter()
            .zip(&other.pieces)
            .all(|(a, b)| b.rows().iter().all(|v| a.contains(v)))
    }
}

/// `N/D` for graded subspaces `D ⊆ N` of an algebra that are stable under
/// multiplication, with the induced action of the variables.
#[derive(Clone, Debug)]
pub struct GradedSubquotient {
    vars: VariableSet,
    basis: Vec<Vec<Monomial>>,
    /// Representatives in `N_d` of a basis of `(N/D)_d`.
    reps: Vec<Vec<Vec<Scalar>>>,
    /// `actions[j][d]`: `×x_j` from degree `d` to `d + 1` in quotient
    /// coordinates.
    actions: Vec<Vec<Matrix>>,
    numerator_dims: Vec<usize>,
    denominator_dims: Vec<usize>,
    hilbert: HilbertSeries,
}

fn quotient_coordinates(solver: &Matrix, q: usize, v: &[Scalar]) -> Vec<Scalar> {
    if solver.cols() == 0 {
        assert!(v.iter().all(Zero::is_zero), "image leaves the numerator");
        return Vec::new();
    }
    let x = solver.solve(v).expect("image leaves the numerator");
    x[..q].to_vec()
}

impl GradedSubquotient {
    pub fn new(a: &ArtinianAlgebra, num: &GradedSubspace, den: &GradedSubspace) -> Self {
        let top = a.socle_degree();
        let n = a.nvars();
        let mut reps: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(top + 1);
        let mut solvers: Vec<Matrix> = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let den_d = den.piece(d).expect("degree in range");
            let num_d = num.piece(d).expect("degree in range");
            let mut span = den_d.clone();
            let mut chosen: Vec<Vec<Scalar>> = Vec::new();
            for v in num_d.rows() {
                if span.insert(v) {
                    chosen.push(v.clone());
                }
            }
            assert_eq!(
                span.dim(),
                num_d.dim(),
                "denominator is not contained in the numerator"
            );
            let cols: Vec<Vec<Scalar>> = chosen.iter().chain(den_d.rows()).cloned().collect();
            solvers.push(Matrix::from_columns(a.dim_in(d), &cols));
            reps.push(chosen);
        }
        let actions: Vec<Vec<Matrix>> = (0..n)
            .map(|j| {
                (0..=top)
                    .map(|d| {
                        let q_next = reps.get(d + 1).map_or(0, Vec::len);
                        let x = a.variable_map(j, d);
                        if d == top {
                            return Matrix::zeros(0, reps[d].len());
                        }
                        let den_next = den.piece(d + 1).unwrap();
                        for v in den.piece(d).unwrap().rows() {
                            assert!(
                                den_next.contains(&x.mul_vec(v)),
                                "denominator is not a submodule"
                            );
                        }
                        let cols: Vec<Vec<Scalar>> = reps[d]
                            .iter()
                            .map(|v| quotient_coordinates(&solvers[d + 1], q_next, &x.mul_vec(v)))
                            .collect();
                        Matrix::from_columns(q_next, &cols)
                    })
                    .collect()
            })
            .collect();
        let hilbert = HilbertSeries::new(0, reps.iter().map(Vec::len).collect());
        GradedSubquotient {
            vars: a.vars().clone(),
            basis: (0..=top).map(|d| a.basis(d).to_vec()).collect(),
            reps,
            actions,
            numerator_dims: num.dims(),
            denominator_dims: den.dims(),
            hilbert,
        }
    }

    pub fn hilbert(&self) -> &HilbertSeries {
        &self.hilbert
    }

    pub fn dim(&self) -> usize {
        self.hilbert.total()
    }

    pub fn numerator_dims(&self) -> &[usize] {
        &self.numerator_dims
    }

    pub fn denominator_dims(&self) -> &[usize] {
        &self.denominator_dims
    }

    /// Ambient representative of a quotient vector in degree `d`.
    pub fn representative(&self, d: usize, coords: &[Scalar]) -> Polynomial {
        let n = self.vars.len();
        let mut v = vec![Scalar::zero(); self.basis[d].len()];
        for (c, rep) in coords.iter().zip(&self.reps[d]) {
            for (slot, r) in v.iter_mut().zip(rep) {
                *slot += c * r;
            }
        }
        Polynomial::from_coordinates(n, &self.basis[d], &v)
    }

    /// `×g` from degree `d` to `d + 1` for every degree `0..=c` of the
    /// ambient algebra.
    pub fn module_action(&self, g: &LinearForm) -> Vec<Matrix> {
        let top = self.reps.len() - 1;
        (0..=top)
            .map(|d| {
                let q_next = self.reps.get(d + 1).map_or(0, Vec::len);
                let mut out = Matrix::zeros(q_next, self.reps[d].len());
                for (j, c) in g.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        out = out.add(&self.actions[j][d].scale(c));
                    }
                }
                out
            })
            .collect()
    }

    /// Number of minimal generators, `dim U/mU`.
    pub fn generator_count(&self) -> usize {
        let mut image = 0;
        for d in 0..self.reps.len().saturating_sub(1) {
            let stacked = self
                .actions
                .iter()
                .map(|act| act[d].clone())
                .reduce(|acc, m| acc.hstack(&m));
            image += stacked.map_or(0, |m| m.rank());
        }
        self.dim() - image
    }

    pub fn is_principal(&self) -> bool {
        self.generator_count() == 1
    }

    /// `Ann(u)` for the generator `u` of a principal module, so that
    /// `U ≅ (R/Ann(u))(−a)` with `a` the lowest degree. `None` unless
    /// principal.
    pub fn annihilator(&self) -> Option<(usize, IdealHandle)> {
        if !self.is_principal() {
            return None;
        }
        let (lo, hi) = self.hilbert.support()?;
        let n = self.vars.len();
        let mut gens: Vec<Polynomial> = Vec::new();
        // images of u under monomials, degree by degree
        let mut images: HashMap<Monomial, Vec<Scalar>> =
            HashMap::from([(Monomial::one(n), vec![Scalar::one()])]);
        let mut previous: Vec<Polynomial> = Vec::new();
        for e in 1..=(hi - lo + 1) {
            let d = lo + e;
            let source = monomials_of_degree(n, e as u32);
            let mut next = HashMap::new();
            let mut cols = Vec::with_capacity(source.len());
            for m in &source {
                let j = (0..n).rev().find(|&j| m.exps()[j] > 0).unwrap();
                let lower = Monomial::var(n, j).quotient_of(m);
                let w = self.actions[j][d - 1].mul_vec(&images[&lower]);
                cols.push(w.clone());
                next.insert(m.clone(), w);
            }
            // degree-e part of the ideal generated in lower degrees
            let mut generated = RowSpan::new(source.len());
            for f in &previous {
                for j in 0..n {
                    let xf = f.mul_monomial(&Monomial::var(n, j), &Scalar::one());
                    generated.insert(&xf.coordinates(&source));
                }
            }
            let dim_d = self.reps.get(d).map_or(0, Vec::len);
            let kernel = Matrix::from_columns(dim_d, &cols).kernel_basis();
            previous = Vec::with_capacity(kernel.len());
            for k in kernel {
                let f = Polynomial::from_coordinates(n, &source, &k);
                if generated.insert(&k) {
                    gens.push(f.clone());
                }
                previous.push(f);
            }
            images = next;
        }
        Some((lo, IdealHandle::new(self.vars.clone(), gens).ok()?))
    }
}

impl GradedModule for GradedSubquotient {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn offset(&self) -> usize {
        self.hilbert.offset()
    }

    fn graded_dims(&self) -> Vec<usize> {
        self.hilbert.coeffs().to_vec()
    }

    fn action_maps(&self, g: &LinearForm) -> Vec<Matrix> {
        match self.hilbert.support() {
            None => Vec::new(),
            Some((lo, hi)) => self.module_action(g)[lo..=hi].to_vec(),
        }
    }

    fn describe_element(&self, degree: usize, coords: &[Scalar]) -> String {
        self.representative(degree, coords).to_string_in(&self.vars)
    }
}

/// `⊕ U_i ⊗ K[t]/(t^{f_i})` as a module over a ring with one extra variable
/// `t` (last), which acts by shifting the tensor factor.
#[derive(Clone, Debug)]
pub struct TensorSum {
    parts: Vec<(GradedSubquotient, usize)>,
    nvars: usize,
    lo: usize,
    hi: usize,
}

impl TensorSum {
    pub fn new(parts: Vec<(GradedSubquotient, usize)>) -> Self {
        let nvars = parts.first().map_or(0, |p| p.0.vars.len()) + 1;
        let mut lo = usize::MAX;
        let mut hi = 0;
        for (u, f) in &parts {
            if let Some((a, b)) = u.hilbert.support() {
                lo = lo.min(a);
                hi = hi.max(b + f - 1);
            }
        }
        if lo == usize::MAX {
            lo = 0;
        }
        TensorSum {
            parts,
            nvars,
            lo,
            hi,
        }
    }

    /// Basis of degree `d`: `(part, module degree a, t-power b, index)`.
    fn layout(&self, d: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for (p, (u, f)) in self.parts.iter().enumerate() {
            for b in 0..*f {
                if b > d {
                    break;
                }
                let a = d - b;
                let q = u.reps.get(a).map_or(0, Vec::len);
                for idx in 0..q {
                    out.push((p, a, b, idx));
                }
            }
        }
        out
    }
}

impl GradedModule for TensorSum {
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn offset(&self) -> usize {
        self.lo
    }

    fn graded_dims(&self) -> Vec<usize> {
        if self.parts.is_empty() {
            return Vec::new();
        }
        (self.lo..=self.hi).map(|d| self.layout(d).len()).collect()
    }

    fn action_maps(&self, g: &LinearForm) -> Vec<Matrix> {
        let n = self.nvars - 1;
        let base = LinearForm::new(g.coeffs()[..n].to_vec());
        let t = &g.coeffs()[n];
        let actions: Vec<Vec<Matrix>> = self
            .parts
            .iter()
            .map(|(u, _)| u.module_action(&base))
            .collect();
        (self.lo..=self.hi)
            .map(|d| {
                let src = self.layout(d);
                let dst = self.layout(d + 1);
                let mut m = Matrix::zeros(dst.len(), src.len());
                for (col, &(p, a, b, idx)) in src.iter().enumerate() {
                    let act = &actions[p][a];
                    for (row, &(p2, a2, b2, idx2)) in dst.iter().enumerate() {
                        if p2 != p {
                            continue;
                        }
                        if b2 == b && a2 == a + 1 && idx2 < act.rows() {
                            m[(row, col)] += act[(idx2, idx)].clone();
                        }
                        if b2 == b + 1 && a2 == a && idx2 == idx {
                            m[(row, col)] += t.clone();
                        }
                    }
                }
                m
            })
            .collect()
    }
}
