//! Laurent polynomials, Newton polytopes and their faces.

mod laurent;
mod polytope;

pub use laurent::{character_value, LaurentPolynomial, ReducedPolynomial};
pub use polytope::{newton_polytope, Face, Facet, LatticePolytope};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum NewtonError {
    #[error("polynomial has no nonzero terms")]
    ZeroPolynomial,
    #[error("ambient rank must be at least 1")]
    ZeroRank,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("torus points have nonzero coordinates")]
    ZeroCoordinate,
    #[error("dilation factor must be positive")]
    NonPositiveMultiple,
}
