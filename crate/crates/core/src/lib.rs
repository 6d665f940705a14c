//! Exact arithmetic and representation theory for the relative Lie algebra
//! cohomology of SU(2,1) with coefficients in `K`-finite principal series
//! tensored with symmetric powers of the standard representation.

pub mod cochain;
pub mod lie;
pub mod linalg;
pub mod lincomb;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod wigner;

pub use lincomb::LinComb;
pub use scalar::{ComplexRadical, RadicalScalar, Rational, ScalarError};
