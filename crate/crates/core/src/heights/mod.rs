//! Heights, local Weil functions and integral points on split tori over `Q`.

mod families;
mod functorial;
mod integral;
mod local;
mod logvalue;
mod point;

pub use families::{detect_coset_families, CosetFamily};
pub use functorial::{functoriality_bound, FunctorialityBound};
pub use integral::{
    enumerate_integral_points, enumerate_integral_points_with_cap, is_s_integral, naive_height, DEFAULT_EXPONENT_CAP,
    MAX_ENUMERATION_RANK,
};
pub use local::{
    boundary_distance, boundary_distance_max, height, height_decomposition_check, local_log, weil_function,
    weil_lower_bound, DecompositionReport, LocalValue,
};
pub use logvalue::LogValue;
pub use point::{is_prime, valuation, Place, PlaceSet, RationalTorusPoint};

use thiserror::Error;

use crate::newton::NewtonError;
use crate::toricfan::FanError;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HeightsError {
    #[error("zero coordinate")]
    ZeroCoordinate,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("point lies on the divisor")]
    OnDivisor,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("image characters leave the span of the source polytope")]
    Unbounded,
    #[error("bound needs exponent {exponent} at {prime}, above the cap {cap}")]
    BoundTooLarge { prime: u64, exponent: u32, cap: u32 },
    #[error("enumeration supports rank at most 3, got {0}")]
    RankTooLarge(usize),
    #[error(transparent)]
    Newton(NewtonError),
    #[error(transparent)]
    Fan(FanError),
}

impl From<NewtonError> for HeightsError {
    fn from(e: NewtonError) -> Self {
        match e {
            NewtonError::ZeroCoordinate => HeightsError::ZeroCoordinate,
            NewtonError::RankMismatch { expected, found } => HeightsError::RankMismatch { expected, found },
            other => HeightsError::Newton(other),
        }
    }
}

impl From<FanError> for HeightsError {
    fn from(e: FanError) -> Self {
        match e {
            FanError::RankMismatch { expected, found } => HeightsError::RankMismatch { expected, found },
            FanError::Newton(n) => n.into(),
            other => HeightsError::Fan(other),
        }
    }
}
