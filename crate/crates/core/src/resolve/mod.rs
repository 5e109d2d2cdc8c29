//! Stellar subdivisions, toric resolution of singularities and divisor pullback.

mod stellar;
mod smooth;

pub use smooth::{log_canonical_boundary, pullback_divisor, resolve_to_smooth, resolve_to_smooth_with_cap, LogCanonical, Subdivision};
pub use stellar::stellar_subdivision;

use thiserror::Error;

use crate::lattice::LatticeVector;
use crate::toricfan::FanError;

pub const DEFAULT_INSERTION_CAP: usize = 512;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ResolveError {
    #[error("ray {0} is outside the support of the fan")]
    RayOutsideSupport(LatticeVector),
    #[error("cannot subdivide at the zero vector")]
    ZeroRay,
    #[error("resolution needed more than {0} insertions")]
    CapExceeded(usize),
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("fan is not complete")]
    IncompleteFan,
    #[error("divisor is not Cartier")]
    NotCartier,
    #[error("divisor lives on a different fan")]
    FanMismatch,
    #[error(transparent)]
    Fan(FanError),
}

impl From<FanError> for ResolveError {
    fn from(e: FanError) -> Self {
        match e {
            FanError::NotCartier => ResolveError::NotCartier,
            FanError::IncompleteFan => ResolveError::IncompleteFan,
            FanError::FanMismatch => ResolveError::FanMismatch,
            other => ResolveError::Fan(other),
        }
    }
}
