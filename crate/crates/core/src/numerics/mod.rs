//! Exact integer and root-of-unity arithmetic, plus error-tracked complex doubles.

mod binomial;
mod guarded;
mod unity;

pub use binomial::{binomial, generalized_binomial};
pub use guarded::{round_to_integer, round_with_residual, CompensatedSum, GuardedComplex};
pub use unity::{roots_of_sign, UnityAngle};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Largest `k * d` accepted by the floating-point pipelines.
pub const PRECISION_BUDGET_KD: u64 = 48;

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
