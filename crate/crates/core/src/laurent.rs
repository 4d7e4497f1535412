//! Laurent polynomials: a polynomial times a (possibly negative) power of the
//! variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{write_terms, Poly};
use crate::scalar::{Ring, SignedCoeff};

/// `x^shift * base`, canonical: a nonzero value has `base(0) != 0`, and zero
/// has `shift == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<T> {
    shift: i64,
    base: Poly<T>,
}

impl<T: Ring> Laurent<T> {
    pub fn new(base: Poly<T>, shift: i64) -> Self {
        if base.is_zero() {
            return Self::zero();
        }
        let low = base.low_order();
        if low == 0 {
            Laurent { shift, base }
        } else {
            Laurent {
                shift: shift + low as i64,
                base: base.shift_down(low),
            }
        }
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        Self::new(p, 0)
    }

    pub fn zero() -> Self {
        Laurent {
            shift: 0,
            base: Poly::zero(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(Poly::constant(c), 0)
    }

    /// `c * x^e`
    pub fn monomial(c: T, e: i64) -> Self {
        Self::new(Poly::constant(c), e)
    }

    /// `1 - x^e` for any integer `e`; zero when `e == 0`.
    pub fn one_minus_x_pow(e: i64) -> Self {
        match e {
            0 => Self::zero(),
            e if e > 0 => Self::new(Poly::one_minus_x_pow(e as usize), 0),
            // 1 - x^e = x^e (x^{-e} - 1)
            e => Self::new(Poly::one_minus_x_pow(e.unsigned_abs() as usize).neg(), e),
        }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn base(&self) -> &Poly<T> {
        &self.base
    }

    pub fn into_parts(self) -> (Poly<T>, i64) {
        (self.base, self.shift)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// Lowest and highest exponent present, `None` for zero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        self.base
            .degree()
            .map(|d| (self.shift, self.shift + d as i64))
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, e: i64) -> T {
        let i = e - self.shift;
        if i < 0 {
            T::zero()
        } else {
            self.base.coeff(i as usize)
        }
    }

    /// Returns the value as a polynomial when no negative powers occur.
    pub fn to_poly(&self) -> Option<Poly<T>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        (self.shift >= 0).then(|| self.base.shift_up(self.shift as usize))
    }

    pub fn neg(&self) -> Self {
        Laurent {
            shift: self.shift,
            base: self.base.neg(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let a = self.base.shift_up((self.shift - lo) as usize);
        let b = other.base.shift_up((other.shift - lo) as usize);
        Self::new(a.add(&b), lo)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(self.base.mul(&other.base), self.shift + other.shift)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.base.scale(c), self.shift)
    }

    /// Multiply by `x^e`.
    pub fn mul_monomial(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent {
            shift: self.shift + e,
            base: self.base.clone(),
        }
    }

    /// In-place multiplication by `1 - x^e`.
    pub fn mul_one_minus_x_pow(&mut self, e: i64) {
        if self.is_zero() {
            return;
        }
        match e {
            0 => *self = Self::zero(),
            e if e > 0 => self.base.mul_one_minus_x_pow(e as usize),
            e => {
                self.base.mul_one_minus_x_pow(e.unsigned_abs() as usize);
                self.base = self.base.neg();
                self.shift += e;
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at `x`, with coefficients embedded into `U`. `x_inv` is needed
    /// only when there are negative exponents.
    pub fn eval_with<U: Ring>(
        &self,
        x: &U,
        x_inv: Option<&U>,
        embed: impl Fn(&T) -> U,
    ) -> Option<U> {
        if self.is_zero() {
            return Some(U::zero());
        }
        let mut acc = U::zero();
        for c in self.base.coeffs().iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_assign_ref(&embed(c));
        }
        let factor = if self.shift >= 0 {
            Ring::pow(x, self.shift as u32)
        } else {
            Ring::pow(x_inv?, self.shift.unsigned_abs() as u32)
        };
        Some(acc.mul_ref(&factor))
    }
}

impl<T: Ring> Ring for Laurent<T> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Laurent::add(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Laurent::sub(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Laurent::mul(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Laurent::neg(self)
    }
    fn from_i64(v: i64) -> Self {
        Laurent::constant(T::from_i64(v))
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = self.base.div_exact(&rhs.base)?;
        Some(Self::new(q, self.shift - rhs.shift))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr<&Laurent<T>> for &Laurent<T> {
            type Output = Laurent<T>;
            fn $m(self, rhs: &Laurent<T>) -> Laurent<T> {
                Laurent::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<T: Ring> Neg for &Laurent<T> {
    type Output = Laurent<T>;
    fn neg(self) -> Laurent<T> {
        Laurent::neg(self)
    }
}

impl<T: Ring> From<Poly<T>> for Laurent<T> {
    fn from(p: Poly<T>) -> Self {
        Laurent::from_poly(p)
    }
}

impl<T: SignedCoeff> fmt::Display for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .base
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (i as i64 + self.shift, c.clone()));
        write_terms(f, terms, "q")
    }
}
