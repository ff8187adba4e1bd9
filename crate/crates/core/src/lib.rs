//! Matrix elements of Lorentz group representations.
//!
//! The crate evaluates SU(2) spherical functions, SU(1,1) Jacobi and conical
//! functions, hyperspherical functions on the complexified rotation angle,
//! full matrix elements on the six-parameter group manifold, and the
//! principal and supplementary unitary series. A verification module checks
//! the defining differential equations and group identities numerically.

pub mod casimir;
pub mod config;
pub mod error;
pub mod halfint;
pub mod hypersph;
pub mod matelem;
pub mod numkernel;
pub mod su11;
pub mod su2;
pub mod verify;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use num_complex::Complex64;
pub use numkernel::ComplexValue;
