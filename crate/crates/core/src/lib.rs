pub mod cli;
pub mod error;
pub mod geometry;
pub mod green;
pub mod ideals;
pub mod matrix;
pub mod sampling;
pub mod semiring;
pub mod structure;
pub mod verify;

pub use error::{Result, TropError};
pub use geometry::{ClosedConvexSet, IsoType};
pub use matrix::{TropMatrix, TropVector};
pub use semiring::{ExtDistance, ProjPoint, Rational, TropScalar};
