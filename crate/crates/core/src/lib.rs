//! Exact computation of join, secant and span dimensions for parametrized
//! projective surfaces, and classification of which unions of surfaces embed
//! into P^4 under generic linear projection.
//!
//! The engine works over exact scalar fields (arbitrary-precision rationals
//! or a large prime field), parametrizes varieties by multihomogeneous
//! integer polynomial maps, and measures dimensions two independent ways:
//! tangent-space arithmetic at generic points, and Jacobian ranks of explicit
//! join parametrizations. The classifier turns those measurements into a
//! structural case label with coordinate witnesses.

pub mod classify;
pub mod corpus;
pub mod error;
pub mod field;
pub mod geometry;
pub mod linalg;
pub mod oracle;
pub mod props;
pub mod schema;
pub mod terracini;

pub use classify::{
    analyze, classify, classify_irreducible, classify_pair, classify_union, CaseId, CaseLabel,
    ComponentReport, PairReport, StructuralReport, VarietyModel, Witnesses,
};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use geometry::{MultiPoly, ParamPoint, PolyMap, Term};
pub use linalg::{Matrix, ProjSubspace};
pub use schema::{
    BuilderDoc, ComponentDoc, PropsDoc, ReportDoc, VarietyDoc, Verdict, SCHEMA_VERSION,
};
pub use terracini::{DimResult, GenericityConfig};
