//! Exact Clifford algebra arithmetic over `R_{p,q}`.
//!
//! Blades are bitmasks, coefficients are arbitrary precision rationals and a
//! [`Multivector`] is a sparse map from blades to nonzero coefficients.

mod blade;
mod multivector;
pub(crate) mod terms;

pub use blade::{blade_product, blade_square_sign, reorder_parity, Blade, Signature};
pub(crate) use blade::parity_sign;
pub use multivector::{linear_combine, volume_element, Multivector};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient, always reduced with a positive denominator.
pub type Scalar = BigRational;

/// `num/den` as a [`Scalar`]. Panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}
