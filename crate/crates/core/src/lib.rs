//! Exact Clifford algebra engine for primitive idempotents and minimal left
//! ideals of `R_{0,6}`, `R_{0,7}` and `R_{0,8}`, and the SU(3), G2 and Spin(7)
//! structure forms they encode.
//!
//! All arithmetic is over arbitrary precision rationals; no floating point is
//! involved anywhere.

pub mod algebra;
pub mod error;
pub mod exterior;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod structures;
pub mod verifier;

pub use algebra::{Blade, Multivector, Scalar, Signature};
pub use error::{AlgebraError, Result};
pub use exterior::{ExteriorForm, HodgeConvention};
