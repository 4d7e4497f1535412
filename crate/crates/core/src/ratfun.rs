//! Canonical rational functions in q.

use std::fmt;

use crate::error::{Error, Result};
use crate::gcd::poly_gcd;
use crate::poly::Poly;
use crate::scalar::{Field, Ring};
use crate::{BigRat, QLaurent, QPolynomial};

/// `q^shift * num / den` in lowest terms.
///
/// Canonical: `den` is monic, neither `num` nor `den` is divisible by `q`,
/// and `gcd(num, den) = 1`. Zero is `0 / 1` with shift 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRational {
    num: QPolynomial,
    den: QPolynomial,
    shift: i64,
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            num: Poly::zero(),
            den: Poly::one(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_laurent(&QLaurent::constant(c))
    }

    pub fn from_i64(v: i64) -> Self {
        Self::constant(BigRat::from_integer(v.into()))
    }

    pub fn from_poly(p: &QPolynomial) -> Self {
        Self::from_laurent(&QLaurent::from_poly(p.clone()))
    }

    pub fn from_laurent(x: &QLaurent) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        QRational {
            num: x.base().clone(),
            den: Poly::one(),
            shift: x.shift(),
        }
    }

    /// Reduces `q^shift * num / den` with a gcd computation.
    pub fn new(num: QPolynomial, den: QPolynomial, shift: i64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Ok(Self::from_coprime(num, den, shift))
    }

    /// Normalises a pair already known to be coprime.
    pub(crate) fn from_coprime(num: QPolynomial, den: QPolynomial, shift: i64) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let ln = num.low_order();
        let ld = den.low_order();
        let lead = den.leading().unwrap().inv().unwrap();
        QRational {
            num: num.shift_down(ln).scale(&lead),
            den: den.shift_down(ld).scale(&lead),
            shift: shift + ln as i64 - ld as i64,
        }
    }

    pub fn num(&self) -> &QPolynomial {
        &self.num
    }

    pub fn den(&self) -> &QPolynomial {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Numerator with the shift folded in, when that is a polynomial.
    pub fn as_laurent(&self) -> Option<QLaurent> {
        self.den
            .is_one()
            .then(|| QLaurent::new(self.num.clone(), self.shift))
    }

    pub fn neg(&self) -> Self {
        QRational {
            num: self.num.neg(),
            den: self.den.clone(),
            shift: self.shift,
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
        let a = self
            .num
            .mul(&other.den)
            .shift_up((self.shift - lo) as usize);
        let b = other
            .num
            .mul(&self.den)
            .shift_up((other.shift - lo) as usize);
        Self::new(a.add(&b), self.den.mul(&other.den), lo).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // cross-cancel so only small gcds are needed
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n = self
            .num
            .div_exact(&g1)
            .unwrap()
            .mul(&other.num.div_exact(&g2).unwrap());
        let d = self
            .den
            .div_exact(&g2)
            .unwrap()
            .mul(&other.den.div_exact(&g1).unwrap());
        Self::from_coprime(n, d, self.shift + other.shift)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(
            self.den.clone(),
            self.num.clone(),
            -self.shift,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        QRational {
            num: self.num.pow(e),
            den: self.den.pow(e),
            shift: self.shift * e as i64,
        }
    }

    /// Value at `q = c`.
    pub fn eval(&self, c: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(c);
        if d.is_zero() || (c.is_zero() && self.shift < 0 && !self.is_zero()) {
            return Err(Error::PoleAtPoint);
        }
        let qs = if self.shift >= 0 {
            Ring::pow(c, self.shift as u32)
        } else {
            Ring::pow(&c.recip(), self.shift.unsigned_abs() as u32)
        };
        Ok(self.num.eval(c) * qs / d)
    }
}

/// Canonical reduced form of `num / den`.
pub fn ratfun_new(num: &QLaurent, den: &QLaurent) -> Result<QRational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    QRational::new(
        num.base().clone(),
        den.base().clone(),
        num.shift() - den.shift(),
    )
}

pub fn ratfun_eval(x: &QRational, c: &BigRat) -> Result<BigRat> {
    x.eval(c)
}

impl From<QLaurent> for QRational {
    fn from(x: QLaurent) -> Self {
        QRational::from_laurent(&x)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = QLaurent::new(self.num.clone(), self.shift);
        if self.den.is_one() {
            write!(f, "{top}")
        } else {
            write!(f, "({top})/({})", self.den)
        }
    }
}
