//! Exact dense linear algebra over the rationals.
//!
//! Forward elimination runs fraction-free on integer rows (Bareiss), and the
//! reduced row-echelon form is normalized over the rationals afterwards.
//! Pivoting is deterministic: columns are scanned left to right and the first
//! row (in order) with a nonzero entry becomes the pivot row.

mod prime;

pub use prime::{is_probable_prime, rank_mod_p, PrimeScalar};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. `BigRational` keeps numerator and denominator
/// coprime with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Matrix,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Builds a `rows × cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    /// Restriction to a subset of columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    pub fn rref(&self) -> Rref {
        let ech = echelon(self);
        let rank = ech.pivots.len();
        let mut rows: Vec<Vec<Scalar>> = ech
            .rows
            .into_iter()
            .take(rank)
            .map(|r| r.into_iter().map(Scalar::from_integer).collect())
            .collect();
        for (k, &p) in ech.pivots.iter().enumerate() {
            let inv = rows[k][p].recip();
            for v in rows[k].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        for k in (0..rank).rev() {
            let p = ech.pivots[k];
            let (above, rest) = rows.split_at_mut(k);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                if row[p].is_zero() {
                    continue;
                }
                let factor = row[p].clone();
                for j in p..self.cols {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &factor * &pivot_row[j];
                    }
                }
            }
        }
        rows.resize(self.rows, vec![Scalar::zero(); self.cols]);
        let reduced = if self.rows == 0 {
            Matrix::zeros(0, self.cols)
        } else {
            Matrix::from_rows(rows)
        };
        Rref {
            rank,
            pivots: ech.pivots,
            reduced,
        }
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref {
            pivots, reduced, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(k, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Linearly independent columns spanning the column space, taken from the
    /// matrix itself (the pivot columns).
    pub fn column_space_basis(&self) -> Vec<Vec<Scalar>> {
        echelon(self)
            .pivots
            .into_iter()
            .map(|j| self.column(j))
            .collect()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let Rref {
            pivots, reduced, ..
        } = self.hstack(&Matrix::identity(n)).rref();
        if pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(reduced.select_columns(&cols))
    }

    /// Solves `self · x = b` for one solution, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()]));
        let Rref {
            pivots, reduced, ..
        } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(k, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row space with rows in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpan {
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(width: usize) -> Self {
        RowSpan {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the current rows; the residue is zero iff `v`
    /// lies in the span.
    pub fn residue(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.width);
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.residue(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.residue(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Scales a rational row to a primitive integer row with the same span.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| {
            if v.is_zero() {
                BigInt::zero()
            } else {
                v.numer() * (&lcm / v.denom())
            }
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination to row-echelon form.
fn echelon(m: &Matrix) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows).map(|i| integer_row(m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(sel) = (r..m.rows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for j in col..m.cols {
                let updated = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() {
                    updated
                } else {
                    updated / &prev
                };
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        r += 1;
    }
    Echelon { rows, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(
            m.inverse().unwrap(),
            Matrix::from_i64(&[&[4, -1], &[-7, 2]])
        );
        let h = Matrix::from_rows(vec![
            vec![int(1), ratio(1, 2)],
            vec![ratio(1, 2), ratio(1, 3)],
        ]);
        assert_eq!(h.mul(&h.inverse().unwrap()), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::zeros(0, 0).inverse().unwrap(), Matrix::zeros(0, 0));
    }

    #[test]
    fn rref_identity() {
        let r = Matrix::identity(3).rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.reduced, Matrix::identity(3));
    }

    #[test]
    fn rref_zero() {
        let r = Matrix::zeros(2, 2).rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let r = Matrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3), int(1)],
            vec![int(1), ratio(2, 3), int(3)],
        ]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(
            r.reduced,
            Matrix::from_rows(vec![
                vec![int(1), ratio(2, 3), int(0)],
                vec![int(0), int(0), int(1)],
            ])
        );
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
        let k = Matrix::from_i64(&[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
        let k = Matrix::from_i64(&[&[0, 0]]).kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(Matrix::from_columns(2, &k).rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.solve(&[int(3), int(1)]), Some(vec![int(2), int(1)]));
        let s = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.solve(&[int(1), int(1)]), None);
    }

    #[test]
    fn row_span_tracks_rank() {
        let mut s = RowSpan::new(3);
        assert!(s.insert(&[int(1), int(2), int(3)]));
        assert!(!s.insert(&[int(2), int(4), int(6)]));
        assert!(s.insert(&[int(0), int(1), int(1)]));
        assert!(s.contains(&[int(1), int(3), int(4)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
    }

    #[test]
    fn bareiss_with_skipped_columns() {
        // A zero column in the middle forces the pivot sequence to skip.
        let m = Matrix::from_i64(&[&[2, 0, 3, 1], &[4, 0, 7, 5], &[6, 0, 9, 4], &[1, 0, 5, 2]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0, 2, 3]);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }
}
