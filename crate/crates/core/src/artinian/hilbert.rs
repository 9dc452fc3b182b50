use std::fmt;

use serde::Serialize;

/// Finite Hilbert series `Σ coeffs[k] q^(offset + k)`, trimmed at both ends.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct HilbertSeries {
    offset: usize,
    coeffs: Vec<usize>,
}

impl HilbertSeries {
    pub fn new(offset: usize, coeffs: Vec<usize>) -> Self {
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return HilbertSeries::default();
        }
        let trail = coeffs.iter().rev().take_while(|&&c| c == 0).count();
        HilbertSeries {
            offset: offset + lead,
            coeffs: coeffs[lead..coeffs.len() - trail].to_vec(),
        }
    }

    /// Series from dimensions indexed by degree starting at 0.
    pub fn from_dims(dims: &[usize]) -> Self {
        Self::new(0, dims.to_vec())
    }

    /// `1 + q + … + q^(len-1)`.
    pub fn truncated(len: usize) -> Self {
        Self::new(0, vec![1; len])
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: usize) -> usize {
        degree
            .checked_sub(self.offset)
            .and_then(|k| self.coeffs.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Lowest and highest degrees with a nonzero coefficient.
    pub fn support(&self) -> Option<(usize, usize)> {
        (!self.is_zero()).then(|| (self.offset, self.offset + self.coeffs.len() - 1))
    }

    /// Dense vector of coefficients for degrees `0..=top`.
    pub fn dense(&self) -> Vec<usize> {
        match self.support() {
            None => Vec::new(),
            Some((_, top)) => (0..=top).map(|d| self.coeff(d)).collect(),
        }
    }

    pub fn total(&self) -> usize {
        self.coeffs.iter().sum()
    }

    pub fn max_coeff(&self) -> usize {
        self.coeffs.iter().copied().max().unwrap_or(0)
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() || other.is_zero() {
            return HilbertSeries::default();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertSeries::new(self.offset + other.offset, out)
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let top = self
            .support()
            .map_or(0, |s| s.1)
            .max(other.support().map_or(0, |s| s.1));
        if self.is_zero() && other.is_zero() {
            return HilbertSeries::default();
        }
        let dims: Vec<usize> = (0..=top).map(|d| self.coeff(d) + other.coeff(d)).collect();
        HilbertSeries::new(0, dims)
    }

    pub fn shift(&self, by: usize) -> HilbertSeries {
        HilbertSeries::new(self.offset + by, self.coeffs.clone())
    }

    /// `h(q) = q^d h(1/q)` for `d = 2·offset + len − 1`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Twice the reflecting degree (an integer), when symmetric.
    pub fn reflecting_degree_twice(&self) -> Option<usize> {
        (!self.is_zero() && self.is_symmetric()).then(|| 2 * self.offset + self.coeffs.len() - 1)
    }

    pub fn is_unimodal(&self) -> bool {
        let mut descending = false;
        for w in self.coeffs.windows(2) {
            if w[1] > w[0] {
                if descending {
                    return false;
                }
            } else if w[1] < w[0] {
                descending = true;
            }
        }
        true
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let d = self.offset + k;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (c, 1) => write!(f, "{c}q")?,
                (1, d) => write!(f, "q^{d}")?,
                (c, d) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimming_and_support() {
        let h = HilbertSeries::new(0, vec![0, 0, 1, 5, 5, 1, 0]);
        assert_eq!(h.offset(), 2);
        assert_eq!(h.coeffs(), &[1, 5, 5, 1]);
        assert_eq!(h.support(), Some((2, 5)));
        assert_eq!(h.coeff(3), 5);
        assert_eq!(h.coeff(9), 0);
        assert!(HilbertSeries::new(3, vec![0, 0]).is_zero());
    }

    #[test]
    fn product_formula() {
        // (1+q)^3 (1+q+q^2)^2 (1+...+q^4) has total 360 and top degree 11
        let mut h = HilbertSeries::truncated(1);
        for len in [2, 2, 2, 3, 3, 5] {
            h = h.mul(&HilbertSeries::truncated(len));
        }
        assert_eq!(h.total(), 360);
        assert_eq!(h.support(), Some((0, 11)));
        assert_eq!(h.reflecting_degree_twice(), Some(11));
        assert!(h.is_unimodal());
    }

    #[test]
    fn symmetry_and_reflection() {
        let h = HilbertSeries::new(2, vec![7, 17, 17, 7]);
        assert_eq!(h.reflecting_degree_twice(), Some(7));
        let g = h.mul(&HilbertSeries::truncated(5));
        assert_eq!(g.reflecting_degree_twice(), Some(11));
        assert!(!HilbertSeries::from_dims(&[1, 2, 1, 1]).is_symmetric());
        assert!(!HilbertSeries::from_dims(&[1, 3, 1, 3, 1]).is_unimodal());
    }

    #[test]
    fn display() {
        assert_eq!(
            HilbertSeries::new(4, vec![1, 5, 5, 1]).to_string(),
            "q^4 + 5q^5 + 5q^6 + q^7"
        );
        assert_eq!(
            HilbertSeries::from_dims(&[1, 2, 1]).to_string(),
            "1 + 2q + q^2"
        );
    }
}
