//! Exact linear algebra: matrices and projective subspaces.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::ProjSubspace;
