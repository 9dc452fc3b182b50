//! Buchberger's algorithm with the normal selection strategy, the coprime
//! criterion and the chain criterion, followed by full interreduction.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::linalg::Scalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Polynomial whose terms are stored in *ascending* order for a given term
/// order, so the leading term is the last element.
#[derive(Clone, Debug)]
pub(crate) struct OrderedPoly {
    terms: Vec<(Monomial, Scalar)>,
}

impl OrderedPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.compare(&a.0, &b.0));
        OrderedPoly { terms }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn leading_monomial(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    fn leading_coefficient(&self) -> &Scalar {
        &self.terms.last().expect("nonzero polynomial").1
    }

    fn make_monic(&mut self) {
        let inv = self.leading_coefficient().recip();
        if !inv.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
    }

    /// `self - c · m · g`, merging in order.
    fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &OrderedPoly, order: MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let shifted = g.terms.iter().map(|(t, a)| (t.mul(m), a * c));
        let mut a = self.terms.iter().peekable();
        let mut b = shifted.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match order.compare(&x.0, &y.0) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => {
                        let (t, v) = b.next().unwrap();
                        out.push((t, -v));
                    }
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let (_, v) = b.next().unwrap();
                        let s = &x.1 - v;
                        if !s.is_zero() {
                            out.push((x.0.clone(), s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (t, v) = b.next().unwrap();
                    out.push((t, -v));
                }
                (None, None) => break,
            }
        }
        OrderedPoly { terms: out }
    }
}

/// Full reduction of `f` by monic `basis` elements.
pub(crate) fn reduce(f: &OrderedPoly, basis: &[OrderedPoly], order: MonomialOrder) -> OrderedPoly {
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last().cloned() {
        match basis.iter().find(|g| g.leading_monomial().divides(&lm)) {
            Some(g) => {
                let q = g.leading_monomial().quotient_of(&lm);
                let c = &lc / g.leading_coefficient();
                p = p.sub_scaled(&c, &q, g, order);
            }
            None => {
                p.terms.pop();
                remainder.push((lm, lc));
            }
        }
    }
    remainder.reverse();
    OrderedPoly { terms: remainder }
}

fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly, order: MonomialOrder) -> OrderedPoly {
    let lcm = f.leading_monomial().lcm(g.leading_monomial());
    let mf = f.leading_monomial().quotient_of(&lcm);
    let mg = g.leading_monomial().quotient_of(&lcm);
    let zero = OrderedPoly { terms: Vec::new() };
    let a = zero.sub_scaled(&-f.leading_coefficient().recip(), &mf, f, order);
    a.sub_scaled(&g.leading_coefficient().recip(), &mg, g, order)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// decreasing leading monomial. Every element is monic.
pub(crate) fn reduced_basis(gens: &[Polynomial], order: MonomialOrder) -> Vec<OrderedPoly> {
    let mut basis: Vec<OrderedPoly> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut p = OrderedPoly::from_poly(g, order);
        p.make_monic();
        basis.push(p);
    }
    if basis.iter().any(|g| g.leading_monomial().is_one()) {
        let nvars = basis[0].leading_monomial().nvars();
        return vec![OrderedPoly::from_poly(&Polynomial::one(nvars), order)];
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
            pending_set.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm first, ties by index for determinism
        let mut best = 0;
        let mut best_lcm = lcm_of(&basis, pending[0]);
        for (k, &pair) in pending.iter().enumerate().skip(1) {
            let l = lcm_of(&basis, pair);
            let better = match l.degree().cmp(&best_lcm.degree()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => order.compare(&l, &best_lcm) == Ordering::Less,
            };
            if better {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pending.swap_remove(best);
        pending_set.remove(&(i, j));

        let (li, lj) = (basis[i].leading_monomial(), basis[j].leading_monomial());
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().divides(&best_lcm)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut h = reduce(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.leading_monomial().is_one() {
            return vec![h];
        }
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            pending.push((k, new));
            pending_set.insert((k, new));
        }
    }

    interreduce(basis, order)
}

fn lcm_of(basis: &[OrderedPoly], (i, j): (usize, usize)) -> Monomial {
    basis[i].leading_monomial().lcm(basis[j].leading_monomial())
}

fn interreduce(basis: Vec<OrderedPoly>, order: MonomialOrder) -> Vec<OrderedPoly> {
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h.leading_monomial().divides(lm) && (h.leading_monomial() != lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| order.compare(b.leading_monomial(), a.leading_monomial()));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<OrderedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = minimal[k].terms.last().unwrap().clone();
        let tail = OrderedPoly {
            terms: minimal[k].terms[..minimal[k].terms.len() - 1].to_vec(),
        };
        let mut reduced = reduce(&tail, &others, order);
        reduced.terms.push(lead);
        reduced.make_monic();
        out.push(reduced);
    }
    out
}

/// Exhaustive Buchberger criterion: all S-polynomials reduce to zero.
pub(crate) fn is_groebner(basis: &[OrderedPoly], order: MonomialOrder) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !reduce(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}
