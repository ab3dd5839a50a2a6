//! Exact cyclic and cocyclic modules attached to finite-dimensional Hopf
//! algebras, the cyclic duality functors relating them, and the Hochschild
//! and cyclic (co)homology of the result.
//!
//! Everything is computed with exact scalars over `Q` or `F_p`. Linear maps
//! are dense [`Matrix`] values acting on column vectors; the basis of a
//! tensor product `V1 ⊗ … ⊗ Vm` is ordered lexicographically with the
//! leftmost factor most significant.

pub mod constructions;
pub mod cyclic;
pub mod error;
pub mod homology;
pub mod hopf;
pub mod io;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod theorems;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{FieldTag, Scalar};
