//! Section counting on toric varieties, D-dimension and the logarithmic Kodaira dimension of
//! hypersurface complements in a torus.

mod kodaira;
mod polytope;

pub use kodaira::{
    d_dimension, d_dimension_with, is_big_double, log_kodaira_dimension, log_kodaira_dimension_with, KodairaReport, LogKodairaReport,
};
pub use polytope::{h0, SectionPolytope};

use thiserror::Error;

use crate::resolve::ResolveError;
use crate::toricfan::FanError;

pub const DEFAULT_M_MAX: u64 = 8;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SectionsError {
    #[error("fan is not complete")]
    IncompleteFan,
    #[error("divisor is not Cartier")]
    NotCartier,
    #[error("the stabilizer of the divisor is not trivial")]
    StabilizerNotTrivial,
    #[error("multiple must be positive")]
    NonPositiveMultiple,
    #[error("section count and polytope dimension disagree: {sections:?} vs {polytope}")]
    Inconsistent { sections: Option<usize>, polytope: usize },
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Fan(FanError),
}

impl From<FanError> for SectionsError {
    fn from(e: FanError) -> Self {
        match e {
            FanError::NotCartier => SectionsError::NotCartier,
            FanError::IncompleteFan => SectionsError::IncompleteFan,
            other => SectionsError::Fan(other),
        }
    }
}
