//! Exact arithmetic: sparse multivariate polynomials over `Q`, their gcd,
//! and canonically reduced rational functions.

mod gcd;
mod monomial;
mod poly;
mod ratfun;
pub(crate) mod sparse;

pub use gcd::poly_gcd;
pub use monomial::Monomial;
pub use poly::{MultiPoly, Ring, VarPrefix};
pub use ratfun::RatFun;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
