//! Toric completions: fans, torus-invariant divisors, orbits and monomial maps.

mod divisor;
mod fan;
mod monomial;
mod orbit;

pub use divisor::{closure_avoids_orbits, divisor_closure, is_ample, polytope_divisor, DivisorClosure, TorusInvariantDivisor};
pub use fan::{completion_fan, Fan};
pub use monomial::MonomialMap;
pub use orbit::{equivariant_projection, orbit_avoidance, orbit_avoidance_with, orbit_table, OrbitDescriptor, OrbitProjection};

use thiserror::Error;

use crate::cones::ConeError;
use crate::newton::NewtonError;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FanError {
    #[error("polytope has dimension {dim} in rank {rank}")]
    NotFullDimensional { dim: usize, rank: usize },
    #[error("cone contains a line")]
    NotPointed,
    #[error("fan does not refine the normal fan")]
    FanMismatch,
    #[error("fan is not complete")]
    IncompleteFan,
    #[error("divisor is not Cartier")]
    NotCartier,
    #[error("coefficients do not match the rays of the fan")]
    RayMismatch,
    #[error("vector is outside the support of the fan")]
    OutsideSupport,
    #[error("zero coordinate")]
    ZeroCoordinate,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
}
