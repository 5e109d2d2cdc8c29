use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LatticeError, LatticeVector};

/// Rectangular matrix of exact integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl LatticeMatrix {
    /// Builds a matrix from its rows. `cols` is needed to give shape to a matrix with no rows.
    pub fn from_rows(cols: usize, rows: Vec<LatticeVector>) -> Result<Self, LatticeError> {
        if let Some(bad) = rows.iter().find(|r| r.rank() != cols) {
            return Err(LatticeError::RankMismatch { expected: cols, found: bad.rank() });
        }
        Ok(LatticeMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().map(LatticeVector::into_entries).collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| LatticeVector::from_i64(r)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        LatticeMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> LatticeVector {
        LatticeVector::new(self.data[i].clone())
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector::new(self.data.iter().map(|r| r[j].clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<LatticeVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub(crate) fn data(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn transpose(&self) -> LatticeMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &LatticeMatrix) -> Result<LatticeMatrix, LatticeError> {
        if self.cols != other.rows {
            return Err(LatticeError::RankMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector, LatticeError> {
        if v.rank() != self.cols {
            return Err(LatticeError::RankMismatch { expected: self.cols, found: v.rank() });
        }
        Ok(LatticeVector::new(
            self.data.iter().map(|r| r.iter().zip(v.entries()).map(|(a, b)| a * b).sum()).collect(),
        ))
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &LatticeVector) -> Result<LatticeVector, LatticeError> {
        if v.rank() != self.rows {
            return Err(LatticeError::RankMismatch { expected: self.rows, found: v.rank() });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (a, row) in v.entries().iter().zip(&self.data) {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                *o += a * b;
            }
        }
        Ok(LatticeVector::new(out))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if self.rows != self.cols {
            return Err(LatticeError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(bareiss_det(self.data.clone()))
    }
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Display for LatticeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = r.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let m = LatticeMatrix::from_i64(&[&[2, 1], &[1, 3]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(5));
        let m = LatticeMatrix::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-2));
        let m = LatticeMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn product_shapes() {
        let a = LatticeMatrix::from_i64(&[&[1, 2, 3]]).unwrap();
        let b = a.transpose();
        assert_eq!(a.mul(&b).unwrap(), LatticeMatrix::from_i64(&[&[14]]).unwrap());
        assert!(a.mul(&a).is_err());
    }
}
