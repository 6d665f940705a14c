//! Floating-point oracle for Wigner functions on U(2), their extensions to SU(2,1),
//! and finite-difference checks of the exact derivative formulas.

pub mod checks;
pub mod derivative;
pub mod error;
pub mod group;
pub mod iwasawa;
pub mod jacobi;
pub mod quadrature;
pub mod section;
pub mod wigner;

pub use error::OracleError;
pub use group::{random_group_point, GroupPoint};
pub use wigner::{euler_from_k, eval_wigner, EulerAngles};
