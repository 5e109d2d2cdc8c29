//! Exact integer-lattice linear algebra.

mod enumerate;
mod frame;
pub mod linalg;
mod matrix;
mod smith;
mod vector;

pub use enumerate::{count_box, scan_box, Halfspace};
pub use frame::SpanFrame;
pub use matrix::LatticeMatrix;
pub use smith::{
    hermite_normal_form, is_unimodular_extension, orthogonal_lattice, saturate_sublattice, smith_normal_form,
    solve_integer, SmithDecomposition,
};
pub use vector::LatticeVector;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vectors are linearly dependent")]
    DependentInput,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}

pub(crate) use matrix::bareiss_det;

/// Generalized cross product: a vector orthogonal to `k-1` vectors in `Z^k`, zero iff they are dependent.
pub(crate) fn cross_normal(vectors: &[&[num_bigint::BigInt]], k: usize) -> Vec<num_bigint::BigInt> {
    debug_assert_eq!(vectors.len() + 1, k);
    (0..k)
        .map(|skip| {
            let minor: Vec<Vec<num_bigint::BigInt>> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = bareiss_det(minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}
