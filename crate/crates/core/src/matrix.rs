//! Dense matrices of arbitrary-precision integers.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of anything convertible to `BigInt`.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row.iter().cloned().map(Into::into));
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// True when every entry is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.data.iter().all(|x| x.is_zero() || x.is_one())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// `[self other]`: the columns of `self` followed by those of `other`.
    pub fn hconcat(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "hconcat needs equal row counts");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert!(self.is_square());
        (0..exp).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn permute_columns(&self, order: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, order)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v.div_floor(&prev);
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rational_rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            for i in rank + 1..a.rows {
                for j in col + 1..a.cols {
                    let v = &a[(i, j)] * &a[(rank, col)] - &a[(i, col)] * &a[(rank, j)];
                    a[(i, j)] = v.div_floor(&prev);
                }
                a[(i, col)] = BigInt::zero();
            }
            prev = a[(rank, col)].clone();
            rank += 1;
        }
        rank
    }

    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            self.data[target * self.cols + j] += v;
        }
    }

    /// `col[target] += factor * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, target: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            self.data[i * self.cols + target] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self[(i, j)].to_string())?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.pow(0), IntMatrix::identity(2));
        assert_eq!(a.pow(2), m(&[&[7, 10], &[15, 22]]));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[&[2, 0], &[0, 3]]).determinant(), BigInt::from(6));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]).determinant(),
            BigInt::from(4)
        );
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), BigInt::zero());
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn rank_small() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rational_rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rational_rank(), 0);
        assert_eq!(m(&[&[0, 1], &[1, 0], &[1, 1]]).rational_rank(), 2);
    }

    #[test]
    fn block_and_zero_one() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let b = m(&[&[2, 0], &[0, 0]]);
        let block = a.hconcat(&b);
        assert_eq!(block.cols(), 4);
        assert_eq!(block.row(0), &[1.into(), 0.into(), 2.into(), 0.into()]);
        assert!(a.is_zero_one());
        assert!(!b.is_zero_one());
    }
}
