//! The named maps between the constructions, and procedures verifying the
//! statements about them degree by degree.

mod homotopy;
mod identification;
mod maps;
mod pairing;
mod theta;

pub use homotopy::*;
pub use identification::*;
pub use maps::*;
pub use pairing::*;
pub use theta::*;
