//! Coefficient traits shared by every polynomial type in the crate.
//!
//! Polynomials, Laurent polynomials and their nestings are generic over a
//! [`Ring`]; division-based algorithms (Euclid, monic normalisation) need a
//! [`Field`]. The exact scalars used in practice are [`BigInt`] and
//! [`BigRational`]; the machine-word rationals are handy for small tests.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
///
/// Operations take references so big-number coefficients are not cloned on
/// every step of a schoolbook product.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    /// Exact quotient `self / rhs` when it exists in the ring.
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = self.sub_ref(rhs);
    }

    /// `self += a * b`
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        self.add_assign_ref(&prod);
    }

    /// `self -= a * b`
    fn mul_sub_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        self.sub_assign_ref(&prod);
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }
}

macro_rules! impl_ring_for_num {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn zero() -> Self { <$t as Zero>::zero() }
            fn one() -> Self { <$t as One>::one() }
            fn is_zero(&self) -> bool { Zero::is_zero(self) }
            fn add_ref(&self, rhs: &Self) -> Self { self + rhs }
            fn sub_ref(&self, rhs: &Self) -> Self { self - rhs }
            fn mul_ref(&self, rhs: &Self) -> Self { self * rhs }
            fn neg_ref(&self) -> Self { -self }
            fn from_i64(v: i64) -> Self { <$t as num_traits::FromPrimitive>::from_i64(v).expect("i64 fits") }
            fn try_div(&self, rhs: &Self) -> Option<Self> { exact_div(self, rhs) }
            fn is_one(&self) -> bool { One::is_one(self) }
            fn add_assign_ref(&mut self, rhs: &Self) { *self += rhs; }
            fn sub_assign_ref(&mut self, rhs: &Self) { *self -= rhs; }
        }
    )*};
}

trait ExactDiv: Sized {
    fn exact_div_impl(&self, rhs: &Self) -> Option<Self>;
}

fn exact_div<T: ExactDiv>(a: &T, b: &T) -> Option<T> {
    a.exact_div_impl(b)
}

impl ExactDiv for BigInt {
    fn exact_div_impl(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

impl ExactDiv for i64 {
    fn exact_div_impl(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 || self % rhs != 0 {
            return None;
        }
        Some(self / rhs)
    }
}

impl ExactDiv for BigRational {
    fn exact_div_impl(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl ExactDiv for Rational64 {
    fn exact_div_impl(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl_ring_for_num!(BigInt, BigRational, Rational64);

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        exact_div(self, rhs)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Field for Rational64 {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Coefficients that know their sign, used for pretty-printing.
pub trait SignedCoeff: Ring + std::fmt::Display {
    fn is_negative_coeff(&self) -> bool;
    fn abs_coeff(&self) -> Self;
}

impl<T: Ring + Signed + std::fmt::Display> SignedCoeff for T {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_coeff(&self) -> Self {
        self.abs()
    }
}

/// Conversion between the integer and rational coefficient domains.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}
