use num_rational::BigRational;
use num_traits::Zero;

use super::FanError;
use crate::lattice::{LatticeMatrix, LatticeVector};
use crate::newton::{character_value, LatticePolytope, LaurentPolynomial};

/// A homomorphism `θ: Gm^μ → Gm^ν` given by a `ν×μ` integer matrix; row `i` is the character
/// giving the `i`-th coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    matrix: LatticeMatrix,
    source_rank: usize,
}

impl MonomialMap {
    /// `source_rank` is needed when the matrix has no rows.
    pub fn new(matrix: LatticeMatrix, source_rank: usize) -> Self {
        debug_assert!(matrix.rows() == 0 || matrix.cols() == source_rank);
        MonomialMap { matrix, source_rank }
    }

    pub fn from_matrix(matrix: LatticeMatrix) -> Self {
        let cols = matrix.cols();
        MonomialMap { matrix, source_rank: cols }
    }

    pub fn identity(rank: usize) -> Self {
        MonomialMap { matrix: LatticeMatrix::identity(rank), source_rank: rank }
    }

    pub fn matrix(&self) -> &LatticeMatrix {
        &self.matrix
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply_point(&self, t: &[BigRational]) -> Result<Vec<BigRational>, FanError> {
        if t.len() != self.source_rank {
            return Err(FanError::RankMismatch { expected: self.source_rank, found: t.len() });
        }
        if t.iter().any(Zero::is_zero) {
            return Err(FanError::ZeroCoordinate);
        }
        Ok(self.matrix.row_vectors().iter().map(|m| character_value(t, m)).collect())
    }

    /// `g ∘ θ` for a Laurent polynomial `g` on the target torus.
    pub fn apply_polynomial(&self, g: &LaurentPolynomial) -> Result<LaurentPolynomial, FanError> {
        if g.rank() != self.target_rank() {
            return Err(FanError::RankMismatch { expected: self.target_rank(), found: g.rank() });
        }
        let terms = g.terms().iter().map(|(m, c)| (self.pull_character(m), c.clone()));
        Ok(LaurentPolynomial::new(self.source_rank, terms)?)
    }

    /// The character `m ∘ θ`, i.e. `θᵀ m`.
    pub fn pull_character(&self, m: &LatticeVector) -> LatticeVector {
        if self.matrix.rows() == 0 {
            return LatticeVector::zero(self.source_rank);
        }
        self.matrix.apply_left(m).expect("character has the target rank")
    }

    /// `θᵀ(q)` for a polytope `q` in the target character lattice.
    pub fn pull_polytope(&self, q: &LatticePolytope) -> Result<LatticePolytope, FanError> {
        if q.rank() != self.target_rank() {
            return Err(FanError::RankMismatch { expected: self.target_rank(), found: q.rank() });
        }
        let pts: Vec<LatticeVector> = q.vertices().iter().map(|m| self.pull_character(m)).collect();
        Ok(LatticePolytope::from_points(self.source_rank, &pts)?)
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &MonomialMap) -> Result<MonomialMap, FanError> {
        if then.source_rank != self.target_rank() {
            return Err(FanError::RankMismatch { expected: self.target_rank(), found: then.source_rank });
        }
        let matrix = if then.matrix.rows() == 0 || self.matrix.rows() == 0 {
            LatticeMatrix::zeros(then.matrix.rows(), self.source_rank)
        } else {
            then.matrix.mul(&self.matrix).expect("shapes agree")
        };
        Ok(MonomialMap { matrix, source_rank: self.source_rank })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::linalg::ratio;

    #[test]
    fn point_examples() {
        let id = MonomialMap::identity(2);
        let t = vec![ratio(2, 3), ratio(-1, 5)];
        assert_eq!(id.apply_point(&t).unwrap(), t);
        let sum = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[1, 1]]).unwrap());
        assert_eq!(sum.apply_point(&[ratio(2, 1), ratio(3, 1)]).unwrap(), vec![ratio(6, 1)]);
        let sq = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[2]]).unwrap());
        assert_eq!(sq.apply_point(&[ratio(3, 1)]).unwrap(), vec![ratio(9, 1)]);
        assert_eq!(sq.apply_point(&t), Err(FanError::RankMismatch { expected: 1, found: 2 }));
    }

    #[test]
    fn polynomial_pullback_matches_evaluation() {
        let theta = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[1, 2], &[-1, 3], &[0, 1]]).unwrap());
        let g = LaurentPolynomial::from_i64(3, &[(&[0, 0, 0], 1), (&[1, 0, -1], 2), (&[0, 2, 1], -3)]).unwrap();
        let f = theta.apply_polynomial(&g).unwrap();
        let t = vec![ratio(3, 2), ratio(-2, 5)];
        let image = theta.apply_point(&t).unwrap();
        assert_eq!(f.evaluate(&t).unwrap(), g.evaluate(&image).unwrap());
    }

    #[test]
    fn composition_is_matrix_product() {
        let a = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[1, 2], &[0, 1], &[3, -1]]).unwrap());
        let b = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[1, 1, 0]]).unwrap());
        let ab = a.then(&b).unwrap();
        assert_eq!(ab.matrix(), &LatticeMatrix::from_i64(&[&[1, 3]]).unwrap());
        let t = vec![ratio(5, 7), ratio(-2, 1)];
        assert_eq!(ab.apply_point(&t).unwrap(), b.apply_point(&a.apply_point(&t).unwrap()).unwrap());
    }

    #[test]
    fn cancellation_to_zero_is_an_error() {
        let theta = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[1], &[1]]).unwrap());
        let g = LaurentPolynomial::from_i64(2, &[(&[1, 0], 1), (&[0, 1], -1)]).unwrap();
        assert!(theta.apply_polynomial(&g).is_err());
    }
}
