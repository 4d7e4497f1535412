//! Exact-arithmetic certification of q-supercongruences.
//!
//! The arithmetic core ([`Poly`], [`Laurent`]) is generic over a [`Ring`] of
//! exact scalars; the aliases below fix the concrete types used by the
//! verifiers. Floating point is deliberately absent.

pub mod bivariate;
pub mod claims;
pub mod congruence;
pub mod error;
pub mod gcd;
pub mod laurent;
pub mod padic;
pub mod poly;
pub mod product;
pub mod q_objects;
pub mod ratfun;
pub mod scalar;
pub mod sweep;

pub use error::{Error, Result};
pub use laurent::Laurent;
pub use poly::Poly;
pub use scalar::{Field, Ring};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

/// Polynomial in q with rational coefficients.
pub type QPolynomial = Poly<BigRat>;
/// Polynomial in q with integer coefficients.
pub type ZPolynomial = Poly<BigInt>;
/// Laurent polynomial in q with rational coefficients.
pub type QLaurent = Laurent<BigRat>;
/// Laurent polynomial in q with integer coefficients.
pub type ZLaurent = Laurent<BigInt>;
/// Laurent polynomial in a whose coefficients are Laurent polynomials in q.
pub type BiLaurent = Laurent<ZLaurent>;
