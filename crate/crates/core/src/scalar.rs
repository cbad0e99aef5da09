//! Real scalar abstraction underneath all complex arithmetic.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar for the numerical kernel.
///
/// Everything in this crate is generic over `Scalar`; `f64` is the working
/// default (see the type aliases at the crate root). The associated constants
/// pin the baseline tolerances at each precision.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Relative tolerance for hermiticity and positivity checks.
    const DEFAULT_TOL: Self;
    /// Off-diagonal Frobenius mass threshold of the Jacobi eigensolver,
    /// relative to the input norm.
    const JACOBI_TOL: Self;
    /// Dependent-column rejection threshold for Gram-Schmidt.
    const ORTHO_TOL: Self;
}

impl Scalar for f64 {
    const DEFAULT_TOL: Self = 1e-9;
    const JACOBI_TOL: Self = 1e-12;
    const ORTHO_TOL: Self = 1e-12;
}

impl Scalar for f32 {
    const DEFAULT_TOL: Self = 1e-4;
    const JACOBI_TOL: Self = 1e-6;
    const ORTHO_TOL: Self = 1e-5;
}

/// Shorthand for converting an `f64` literal into the scalar type.
pub fn real<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("f64 conversion")
}

/// Shorthand for converting a count into the scalar type.
pub fn count<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("usize conversion")
}
