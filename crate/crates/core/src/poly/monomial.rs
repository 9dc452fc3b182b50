use std::cmp::Ordering;

/// Exponent vector over a fixed variable set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable if this monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nz = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nz.next(), nz.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    /// Drops (or keeps) a block of variables.
    pub fn project(&self, range: std::ops::Range<usize>) -> Monomial {
        Monomial {
            exps: self.exps[range].to_vec(),
        }
    }

    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Monomial { exps }
    }

    pub fn prepend(&self, extra: usize) -> Monomial {
        let mut exps = vec![0; extra];
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }
}

/// Supported term orders. Variables are ordered `x_1 > … > x_n` by position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Block order: degree in the variables before `split` first, then
    /// grevlex on each block.
    Elimination { split: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Elimination { split } => grevlex(&a.exps[..split], &b.exps[..split])
                .then_with(|| grevlex(&a.exps[split..], &b.exps[split..])),
        }
    }
}

/// Every monomial of degree `d` in `n` variables, in decreasing grevlex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.compare(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // y^2 > xz in (x, y, z)
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn elimination_prefers_first_block() {
        let o = MonomialOrder::Elimination { split: 1 };
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], m(&[2, 0, 0]));
        assert_eq!(ms[5], m(&[0, 0, 2]));
        assert_eq!(monomials_of_degree(2, 0), vec![m(&[0, 0])]);
    }
}
