use thiserror::Error;

use crate::cones::ConeError;
use crate::heights::HeightsError;
use crate::lattice::LatticeError;
use crate::newton::NewtonError;
use crate::resolve::ResolveError;
use crate::sections::SectionsError;
use crate::toricfan::FanError;

/// Any error of the pipeline, with a stable machine-readable code.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Sections(#[from] SectionsError),
    #[error(transparent)]
    Heights(#[from] HeightsError),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::InvalidOption(_) => "InvalidOption",
            Error::Lattice(e) => lattice_code(e),
            Error::Newton(e) => newton_code(e),
            Error::Cone(e) => cone_code(e),
            Error::Fan(e) => fan_code(e),
            Error::Resolve(e) => resolve_code(e),
            Error::Sections(e) => sections_code(e),
            Error::Heights(e) => heights_code(e),
        }
    }

    /// Whether the error comes from a search cap rather than from the input itself.
    pub fn is_cap(&self) -> bool {
        matches!(self.code(), "CapExceeded" | "BoundTooLarge")
    }
}

fn lattice_code(e: &LatticeError) -> &'static str {
    match e {
        LatticeError::DependentInput => "DependentInput",
        LatticeError::RankMismatch { .. } => "RankMismatch",
        LatticeError::NotSquare { .. } => "NotSquare",
    }
}

fn newton_code(e: &NewtonError) -> &'static str {
    match e {
        NewtonError::ZeroPolynomial => "ZeroPolynomial",
        NewtonError::ZeroRank => "ZeroRank",
        NewtonError::RankMismatch { .. } => "RankMismatch",
        NewtonError::EmptyPointSet => "EmptyPointSet",
        NewtonError::ZeroCoordinate => "ZeroCoordinate",
        NewtonError::NonPositiveMultiple => "NonPositiveMultiple",
    }
}

fn cone_code(e: &ConeError) -> &'static str {
    match e {
        ConeError::NotAVertex(_) => "NotAVertex",
        ConeError::NotPointed(_) => "NotPointed",
        ConeError::CapExceeded(_) => "CapExceeded",
        ConeError::RankMismatch { .. } => "RankMismatch",
    }
}

fn fan_code(e: &FanError) -> &'static str {
    match e {
        FanError::NotFullDimensional { .. } => "NotFullDimensional",
        FanError::NotPointed => "NotPointed",
        FanError::FanMismatch => "FanMismatch",
        FanError::IncompleteFan => "IncompleteFan",
        FanError::NotCartier => "NotCartier",
        FanError::RayMismatch => "RayMismatch",
        FanError::OutsideSupport => "OutsideSupport",
        FanError::ZeroCoordinate => "ZeroCoordinate",
        FanError::RankMismatch { .. } => "RankMismatch",
        FanError::Cone(c) => cone_code(c),
        FanError::Newton(n) => newton_code(n),
    }
}

fn resolve_code(e: &ResolveError) -> &'static str {
    match e {
        ResolveError::RayOutsideSupport(_) => "RayOutsideSupport",
        ResolveError::ZeroRay => "ZeroRay",
        ResolveError::CapExceeded(_) => "CapExceeded",
        ResolveError::NotSmooth => "NotSmooth",
        ResolveError::IncompleteFan => "IncompleteFan",
        ResolveError::NotCartier => "NotCartier",
        ResolveError::FanMismatch => "FanMismatch",
        ResolveError::Fan(f) => fan_code(f),
    }
}

fn sections_code(e: &SectionsError) -> &'static str {
    match e {
        SectionsError::IncompleteFan => "IncompleteFan",
        SectionsError::NotCartier => "NotCartier",
        SectionsError::StabilizerNotTrivial => "StabilizerNotTrivial",
        SectionsError::NonPositiveMultiple => "NonPositiveMultiple",
        SectionsError::Inconsistent { .. } => "Inconsistent",
        SectionsError::Resolve(r) => resolve_code(r),
        SectionsError::Fan(f) => fan_code(f),
    }
}

fn heights_code(e: &HeightsError) -> &'static str {
    match e {
        HeightsError::ZeroCoordinate => "ZeroCoordinate",
        HeightsError::ZeroDenominator => "ZeroDenominator",
        HeightsError::OnDivisor => "OnDivisor",
        HeightsError::NotPrime(_) => "NotPrime",
        HeightsError::RankMismatch { .. } => "RankMismatch",
        HeightsError::Unbounded => "Unbounded",
        HeightsError::BoundTooLarge { .. } => "BoundTooLarge",
        HeightsError::RankTooLarge(_) => "RankTooLarge",
        HeightsError::Newton(n) => newton_code(n),
        HeightsError::Fan(f) => fan_code(f),
    }
}
