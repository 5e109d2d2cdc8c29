//! Small dense linear algebra over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LatticeVector;

pub fn to_rational(v: &LatticeVector) -> Vec<BigRational> {
    v.entries().iter().map(|a| BigRational::from_integer(a.clone())).collect()
}

/// Rank of a list of rational row vectors.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for j in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][j].is_zero()) else { continue };
        a.swap(p, rank);
        let pivot = a[rank][j].clone();
        for i in rank + 1..a.len() {
            if a[i][j].is_zero() {
                continue;
            }
            let factor = &a[i][j] / &pivot;
            for k in j..cols {
                let v = &factor * &a[rank][k];
                a[i][k] -= v;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_of(vectors: &[LatticeVector]) -> usize {
    rational_rank(&vectors.iter().map(to_rational).collect::<Vec<_>>())
}

/// Affine dimension of a finite point set (`-1` encoded as `None` for the empty set).
pub fn affine_dim(points: &[Vec<BigRational>]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vec<BigRational>> =
        points[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    Some(rational_rank(&diffs))
}

/// Unique solution of the square system `a · x = b`, or `None` if `a` is singular.
pub fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    for j in 0..n {
        let p = (j..n).find(|&i| !m[i][j].is_zero())?;
        m.swap(p, j);
        let pivot = m[j][j].clone();
        for k in j..=n {
            m[j][k] = &m[j][k] / &pivot;
        }
        for i in 0..n {
            if i == j || m[i][j].is_zero() {
                continue;
            }
            let factor = m[i][j].clone();
            for k in j..=n {
                let v = &factor * &m[j][k];
                m[i][k] -= v;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn floor(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

pub fn ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> BigRational {
    BigRational::one()
}
