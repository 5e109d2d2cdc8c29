use num_bigint::BigInt;
use num_traits::Zero;

use super::smith::{saturate_sublattice, smith_normal_form};
use super::{LatticeError, LatticeMatrix, LatticeVector};

/// A saturated sublattice `L ⊆ Z^μ` together with a unimodular completion of its basis.
///
/// Points of `L` get integer coordinates in the basis, and functionals on `L` lift to
/// integral functionals on `Z^μ` that vanish on the chosen complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanFrame {
    rank: usize,
    basis: Vec<LatticeVector>,
    complement: Vec<LatticeVector>,
    // inverse of the matrix whose rows are basis ++ complement
    inverse: LatticeMatrix,
}

impl SpanFrame {
    /// Frame for the saturation of the span of `generators`.
    pub fn new(rank: usize, generators: &[LatticeVector]) -> Result<Self, LatticeError> {
        let basis = saturate_sublattice(rank, generators)?;
        let d = basis.len();
        let b = LatticeMatrix::from_rows(rank, basis.clone())?;
        let snf = smith_normal_form(&b);
        debug_assert!(snf.diag.iter().all(|x| x == &BigInt::from(1)));
        let complement: Vec<LatticeVector> = (d..rank).map(|i| snf.right_inverse().row(i)).collect();
        let mut block = LatticeMatrix::identity(rank);
        for i in 0..d {
            for j in 0..d {
                block.set(i, j, snf.left.get(i, j).clone());
            }
        }
        let inverse = snf.right.mul(&block)?;
        Ok(SpanFrame { rank, basis, complement, inverse })
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LatticeVector] {
        &self.basis
    }

    pub fn complement(&self) -> &[LatticeVector] {
        &self.complement
    }

    /// Coordinates of `x` in the basis, or `None` when `x` is outside the span.
    pub fn coords(&self, x: &LatticeVector) -> Option<Vec<BigInt>> {
        let y = self.inverse.apply_left(x).ok()?;
        let d = self.dim();
        if y.entries()[d..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(y.entries()[..d].to_vec())
    }

    pub fn embed(&self, coords: &[BigInt]) -> LatticeVector {
        let mut out = LatticeVector::zero(self.rank).into_entries();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (o, e) in out.iter_mut().zip(b.entries()) {
                *o += c * e;
            }
        }
        LatticeVector::new(out)
    }

    /// Integral `u ∈ Z^μ` with `⟨u, basis_i⟩ = values_i` and `⟨u, complement_j⟩ = 0`.
    pub fn lift_functional(&self, values: &[BigInt]) -> LatticeVector {
        let d = self.dim();
        LatticeVector::new(
            (0..self.rank)
                .map(|k| (0..d).map(|i| self.inverse.get(k, i) * &values[i]).sum())
                .collect(),
        )
    }
}
