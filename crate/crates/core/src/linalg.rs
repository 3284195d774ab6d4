//! Dense integer matrices with exact rational elimination.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Row-major dense matrix over `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged matrix rows");
            data.extend_from_slice(r.as_ref());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InternalInconsistency(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if self.cols != v.len() {
            return Err(Error::InternalInconsistency(format!(
                "cannot apply a {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Kronecker product; the left factor indexes the most significant digit.
    pub fn kron(&self, rhs: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)];
            }
        }
        out
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self[(i, i)] == 1 && (i + 1..self.cols).all(|j| self[(i, j)] == 0)
            })
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.transpose().is_lower_unitriangular()
    }

    fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rational_rank(self.to_rational(), self.cols)
    }

    /// Exact inverse; fails unless the inverse has integer entries.
    pub fn inverse(&self) -> Result<IntMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotUnimodular(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.to_rational();
        for (i, row) in a.iter_mut().enumerate() {
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::NotUnimodular("matrix is singular".into()))?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in col..2 * n {
                        let t = &a[col][k] * &f;
                        a[r][k] -= t;
                    }
                }
            }
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = &a[i][n + j];
                if !x.is_integer() {
                    return Err(Error::NotUnimodular(format!(
                        "inverse has the non-integer entry {x}"
                    )));
                }
                out[(i, j)] = x
                    .to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::NotUnimodular("inverse entry overflows i64".into()))?;
            }
        }
        Ok(out)
    }
}

/// Rank of a rational matrix with `cols` columns by Gaussian elimination.
pub fn rational_rank(mut a: Vec<Vec<BigRational>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].recip();
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for k in col..cols {
                let t = &a[rank][k] * &f;
                a[r][k] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a sparse integer system given as rows of `(column, coefficient)`.
pub fn sparse_rank(rows: &[Vec<(usize, i64)>], cols: usize) -> usize {
    let dense = rows
        .iter()
        .filter(|r| r.iter().any(|&(_, v)| v != 0))
        .map(|r| {
            let mut d = vec![BigRational::zero(); cols];
            for &(c, v) in r {
                d[c] += BigRational::from_integer(BigInt::from(v));
            }
            d
        })
        .collect();
    rational_rank(dense, cols)
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// True when every entry is 0 or 1.
pub fn is_zero_one(m: &IntMatrix) -> bool {
    m.data.iter().all(|&x| x == 0 || x == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_unitriangular() {
        let m = IntMatrix::from_rows(&[[1, 0, 0], [2, 1, 0], [1, 1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, IntMatrix::from_rows(&[[1, 0, 0], [-2, 1, 0], [1, -1, 1]]));
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn inverse_rejects_non_unimodular() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 1]]);
        assert!(matches!(m.inverse(), Err(Error::NotUnimodular(_))));
        let s = IntMatrix::from_rows(&[[1, 1], [1, 1]]);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn kron_orders_left_factor_first() {
        let c = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        let k = c.kron(&c);
        assert_eq!(
            k,
            IntMatrix::from_rows(&[[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]])
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(IntMatrix::from_rows(&[[1, 2], [2, 4]]).rank(), 1);
        assert_eq!(IntMatrix::identity(3).rank(), 3);
        assert_eq!(IntMatrix::zeros(2, 3).rank(), 0);
        assert_eq!(sparse_rank(&[vec![(0, 1), (1, -1)], vec![(1, 1), (0, -1)]], 2), 1);
    }

    proptest! {
        #[test]
        fn unitriangular_inverse_round_trips(entries in prop::collection::vec(-3i64..4, 10)) {
            let n = 5;
            let mut m = IntMatrix::identity(n);
            let mut it = entries.into_iter();
            for i in 0..n {
                for j in 0..i {
                    m[(i, j)] = it.next().unwrap();
                }
            }
            let inv = m.inverse().unwrap();
            prop_assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(n));
            prop_assert!(inv.is_lower_unitriangular());
        }

        #[test]
        fn kron_mixed_product(a in prop::collection::vec(-2i64..3, 4), b in prop::collection::vec(-2i64..3, 4)) {
            let a = IntMatrix::from_rows(&[&a[0..2], &a[2..4]]);
            let b = IntMatrix::from_rows(&[&b[0..2], &b[2..4]]);
            let lhs = a.kron(&b).mul(&b.kron(&a)).unwrap();
            let rhs = a.mul(&b).unwrap().kron(&b.mul(&a).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
