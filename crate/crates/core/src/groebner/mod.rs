//! Homogeneous ideals, reduced Gröbner bases and the ideal calculus built on
//! them: sums, intersections, colons, membership, equality, initial ideals
//! and minimal generator degrees.

mod buchberger;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use buchberger::{is_groebner, reduce, reduced_basis, OrderedPoly};

use crate::error::{Error, Result};
use crate::linalg::{RowSpan, Scalar};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, VariableSet};

/// A reduced Gröbner basis for a fixed term order.
#[derive(Clone, Debug)]
pub struct GBasis {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial>,
    leading: Vec<Monomial>,
    ordered: Vec<OrderedPoly>,
}

impl GBasis {
    pub(crate) fn compute(nvars: usize, gens: &[Polynomial], order: MonomialOrder) -> GBasis {
        let ordered = if gens.iter().all(Polynomial::is_zero) {
            Vec::new()
        } else {
            reduced_basis(gens, order)
        };
        GBasis {
            order,
            nvars,
            elements: ordered.iter().map(|g| g.to_poly(nvars)).collect(),
            leading: ordered
                .iter()
                .map(|g| g.leading_monomial().clone())
                .collect(),
            ordered,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Leading monomials, in the same order as [`GBasis::elements`].
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    /// Remainder of `f` with no term divisible by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "ring mismatch");
        if f.is_zero() || self.ordered.is_empty() {
            return f.clone();
        }
        reduce(
            &OrderedPoly::from_poly(f, self.order),
            &self.ordered,
            self.order,
        )
        .to_poly(self.nvars)
    }

    /// True when no term of `m` is divisible by a leading monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    /// Exhaustive check that all S-polynomials reduce to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        is_groebner(&self.ordered, self.order)
    }

    /// Reducedness: monic, and no term divisible by another element's
    /// leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.ordered.iter().enumerate().all(|(k, g)| {
            let monic = g.to_poly(self.nvars).coefficient(g.leading_monomial())
                == Scalar::from_integer(1.into());
            let clean = self.elements[k].terms().iter().all(|(m, _)| {
                self.leading
                    .iter()
                    .enumerate()
                    .all(|(l, lm)| l == k || !lm.divides(m))
            });
            monic && clean
        })
    }
}

/// Homogeneous ideal with write-once cached Gröbner bases.
#[derive(Debug)]
pub struct IdealHandle {
    vars: VariableSet,
    generators: Vec<Polynomial>,
    gb_cache: Mutex<HashMap<MonomialOrder, Arc<GBasis>>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            vars: self.vars.clone(),
            generators: self.generators.clone(),
            gb_cache: Mutex::new(self.gb_cache.lock().expect("cache lock").clone()),
        }
    }
}

impl IdealHandle {
    /// Zero generators are dropped; every other generator must be homogeneous.
    pub fn new(vars: VariableSet, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != vars.len() {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NonHomogeneousInput(g.to_string_in(&vars)));
            }
            gens.push(g);
        }
        Ok(IdealHandle {
            vars,
            generators: gens,
            gb_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse<S: AsRef<str>>(vars: &VariableSet, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| vars.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(vars.clone(), gens)
    }

    pub fn unit(vars: VariableSet) -> Self {
        let n = vars.len();
        IdealHandle::new(vars, vec![Polynomial::one(n)]).expect("constant is homogeneous")
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn check_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn reduced_groebner(&self, order: MonomialOrder) -> Arc<GBasis> {
        if let Some(gb) = self.gb_cache.lock().expect("cache lock").get(&order) {
            return Arc::clone(gb);
        }
        // computed outside the lock; a concurrent duplicate yields the same basis
        let gb = Arc::new(GBasis::compute(self.nvars(), &self.generators, order));
        self.gb_cache
            .lock()
            .expect("cache lock")
            .entry(order)
            .or_insert(gb)
            .clone()
    }

    pub fn grevlex(&self) -> Arc<GBasis> {
        self.reduced_groebner(MonomialOrder::Grevlex)
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.grevlex().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(self.normal_form(f).is_zero())
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via identical reduced grevlex bases.
    pub fn equals(&self, other: &IdealHandle) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.grevlex().elements() == other.grevlex().elements())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealHandle::new(self.vars.clone(), gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<IdealHandle> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        IdealHandle::new(self.vars.clone(), gens)
    }

    /// `I ∩ J` by eliminating an auxiliary variable `t` from
    /// `t·I + (1 − t)·J`. The auxiliary variable is placed first internally
    /// so the elimination block order removes it.
    pub fn intersection(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return IdealHandle::new(self.vars.clone(), Vec::new());
        }
        let n = self.nvars();
        let t = Polynomial::var(n + 1, 0);
        let one_minus_t = Polynomial::one(n + 1).sub(&t);
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|f| t.mul(&f.prepend_vars(1)))
            .collect();
        gens.extend(
            other
                .generators
                .iter()
                .map(|g| one_minus_t.mul(&g.prepend_vars(1))),
        );
        let order = MonomialOrder::Elimination { split: 1 };
        let gb = GBasis::compute(n + 1, &gens, order);
        let mut out = Vec::new();
        for g in gb.elements() {
            if g.terms().iter().all(|(m, _)| m.exps()[0] == 0) {
                let projected = Polynomial::from_terms(
                    n,
                    g.terms()
                        .iter()
                        .map(|(m, c)| (m.project(1..n + 1), c.clone())),
                );
                debug_assert!(projected.is_homogeneous(), "elimination lost homogeneity");
                out.push(projected);
            }
        }
        IdealHandle::new(self.vars.clone(), out)
    }

    /// `I : f = { g | g·f ∈ I }`, computed as `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<IdealHandle> {
        if f.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(IdealHandle::unit(self.vars.clone()));
        }
        if f.homogeneous_degree().is_none() {
            return Err(Error::NonHomogeneousInput(f.to_string_in(&self.vars)));
        }
        if f.is_constant() || self.is_unit() {
            return Ok(self.clone());
        }
        let principal = IdealHandle::new(self.vars.clone(), vec![f.clone()])?;
        let meet = self.intersection(&principal)?;
        let quotients = meet
            .generators
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .expect("generator of I ∩ (f) is a multiple of f")
            })
            .collect();
        IdealHandle::new(self.vars.clone(), quotients)
    }

    /// `I : f^k` as `k` successive single colons.
    pub fn colon_power(&self, f: &Polynomial, k: u32) -> Result<IdealHandle> {
        let mut cur = self.clone();
        for _ in 0..k {
            if cur.is_unit() {
                break;
            }
            cur = cur.colon(f)?;
        }
        Ok(cur)
    }

    /// Monomial ideal of leading monomials of the reduced basis.
    pub fn leading_term_ideal(&self, order: MonomialOrder) -> IdealHandle {
        let gb = self.reduced_groebner(order);
        let gens = gb
            .leading_monomials()
            .iter()
            .map(|m| Polynomial::monomial(m.clone(), Scalar::from_integer(1.into())))
            .collect();
        IdealHandle::new(self.vars.clone(), gens).expect("monomials are homogeneous")
    }

    /// A minimal homogeneous generating set, chosen among the given
    /// generators degree by degree.
    pub fn minimal_generating_set(&self) -> Vec<Polynomial> {
        let n = self.nvars();
        if self.is_unit() {
            return vec![Polynomial::one(n)];
        }
        let mut by_degree: BTreeMap<u32, Vec<&Polynomial>> = BTreeMap::new();
        for g in &self.generators {
            by_degree
                .entry(g.homogeneous_degree().expect("homogeneous"))
                .or_default()
                .push(g);
        }
        let mut chosen: Vec<Polynomial> = Vec::new();
        for (&d, gens) in &by_degree {
            let basis = monomials_of_degree(n, d);
            let mut span = RowSpan::new(basis.len());
            for c in &chosen {
                let cd = c.homogeneous_degree().unwrap();
                for m in monomials_of_degree(n, d - cd) {
                    let p = c.mul_monomial(&m, &Scalar::from_integer(1.into()));
                    span.insert(&p.coordinates(&basis));
                }
            }
            for g in gens {
                if span.insert(&g.coordinates(&basis)) {
                    chosen.push((*g).clone());
                }
            }
        }
        chosen
    }

    /// Degrees of a minimal generating set as `(degree, count)` pairs.
    pub fn minimal_generators(&self) -> Vec<(u32, usize)> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for g in self.minimal_generating_set() {
            *counts
                .entry(g.homogeneous_degree().unwrap_or(0))
                .or_default() += 1;
        }
        counts.into_iter().collect()
    }

    pub fn minimal_generator_count(&self) -> usize {
        self.minimal_generators().iter().map(|(_, c)| c).sum()
    }

    /// Renders the reduced grevlex basis with the ring's variable names.
    pub fn basis_strings(&self) -> Vec<String> {
        self.grevlex()
            .elements()
            .iter()
            .map(|g| g.to_string_in(&self.vars))
            .collect()
    }
}

#[cfg(test)]
mod tests;
