//! Heuristic prime-field rank. Ranks modulo `p` never exceed the rational
//! rank and agree with it for all but finitely many primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Matrix;
use crate::error::{Error, Result};

/// Element of `Z/pZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeScalar {
    value: u64,
    modulus: u64,
}

impl PrimeScalar {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if !is_probable_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(PrimeScalar {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        Some(PrimeScalar {
            value: pow_mod(self.value, self.modulus - 2, self.modulus),
            ..self
        })
    }
}

impl std::ops::Add for PrimeScalar {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        PrimeScalar {
            value: ((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64,
            ..self
        }
    }
}

impl std::ops::Mul for PrimeScalar {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        PrimeScalar {
            value: mul_mod(self.value, rhs.value, self.modulus),
            ..self
        }
    }
}

impl std::ops::Neg for PrimeScalar {
    type Output = Self;

    fn neg(self) -> Self {
        PrimeScalar {
            value: (self.modulus - self.value) % self.modulus,
            ..self
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller–Rabin with the first twelve prime bases (exact for all `u64`).
pub fn is_probable_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn reduce(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Rank of `m` after reducing every entry modulo `p`.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Result<usize> {
    if !is_probable_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for v in m.row(i) {
            if v.is_zero() {
                row.push(0);
                continue;
            }
            let den = reduce(v.denom(), p);
            if den == 0 {
                return Err(Error::DenominatorDivisibleByP(p));
            }
            let num = reduce(v.numer(), p);
            row.push(mul_mod(num, pow_mod(den, p - 2, p), p));
        }
        rows.push(row);
    }
    let cols = m.cols();
    let mut rank = 0;
    for col in 0..cols {
        let Some(sel) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&v| mul_mod(v, inv, p)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let lead = row[col];
            if lead == 0 {
                continue;
            }
            for j in col..cols {
                let sub = mul_mod(lead, pivot_row[j], p);
                row[j] = (row[j] + p - sub) % p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    const P: u64 = 1_000_003;

    #[test]
    fn primality() {
        assert!(is_probable_prime(P));
        assert!(is_probable_prime(2));
        assert!(!is_probable_prime(1));
        assert!(!is_probable_prime(1_000_001));
        assert!(PrimeScalar::new(5, 1_000_001).is_err());
    }

    #[test]
    fn field_ops() {
        let a = PrimeScalar::new(3, 7).unwrap();
        assert_eq!((a.inv().unwrap() * a).value(), 1);
        assert_eq!((a + -a).value(), 0);
        assert_eq!(PrimeScalar::new(0, 7).unwrap().inv(), None);
    }

    #[test]
    fn modular_rank_examples() {
        assert_eq!(rank_mod_p(&Matrix::identity(3), P).unwrap(), 3);
        assert_eq!(
            rank_mod_p(&Matrix::from_i64(&[&[2, 4], &[1, 2]]), P).unwrap(),
            1
        );
        let drop = Matrix::from_i64(&[&[P as i64, 0], &[0, 1]]);
        assert_eq!(drop.rank(), 2);
        assert_eq!(rank_mod_p(&drop, P).unwrap(), 1);
    }

    #[test]
    fn denominator_divisible_by_p() {
        let m = Matrix::from_rows(vec![vec![ratio(1, 7), int(1)]]);
        assert_eq!(rank_mod_p(&m, 7), Err(Error::DenominatorDivisibleByP(7)));
        assert_eq!(rank_mod_p(&m, 11).unwrap(), 1);
    }
}
