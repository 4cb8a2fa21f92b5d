//! Multihomogeneous polynomials, parametrized varieties and builders.

pub mod builders;
pub mod map;
pub mod poly;

pub use map::{ParamPoint, PolyMap, SAMPLE_BOUND};
pub use poly::{MultiPoly, Term};
