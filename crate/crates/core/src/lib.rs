//! Exact computations for hypersurfaces in split tori: Newton polytopes, Hilbert bases, toric
//! completions and their resolutions, section counts, and heights of rational points.

mod hull;

pub mod caps;
pub mod cones;
mod error;
pub mod heights;
pub mod io;
pub mod lattice;
pub mod newton;
pub mod resolve;
pub mod sections;
pub mod toricfan;

pub use caps::Caps;
pub use error::Error;
