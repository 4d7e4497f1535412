//! Dense univariate polynomials over a generic coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Field, Ring, SignedCoeff};

/// Dense polynomial, coefficients stored lowest degree first.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| T::from_i64(c)).collect())
    }

    /// `1 - x^e`; for `e == 0` this is the zero polynomial.
    pub fn one_minus_x_pow(e: usize) -> Self {
        let mut p = Self::one();
        p.mul_one_minus_x_pow(e);
        p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Number of nonzero coefficients.
    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Largest `k` with `x^k | self`; zero for the zero polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            c.add_assign_ref(s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.len() {
            coeffs.resize(other.len(), T::zero());
        }
        for (c, o) in coeffs.iter_mut().zip(&other.coeffs) {
            c.sub_assign_ref(o);
        }
        Self::from_coeffs(coeffs)
    }

    /// Schoolbook product that iterates over the sparser factor, so sparse
    /// times dense costs `nnz * len` rather than `len * len`.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (sparse, dense) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![T::zero(); sparse.len() + dense.len() - 1];
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dense.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].mul_add_assign(a, b);
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by `x^k`, which must divide `self`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.low_order() || self.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// In-place multiplication by `1 - x^e`.
    pub fn mul_one_minus_x_pow(&mut self, e: usize) {
        if self.is_zero() {
            return;
        }
        if e == 0 {
            self.coeffs.clear();
            return;
        }
        let old = self.coeffs.len();
        self.coeffs.resize(old + e, T::zero());
        for i in (e..old + e).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].sub_assign_ref(&lo[i - e]);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_assign_ref(c);
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Long division that only ever divides by the divisor's leading
    /// coefficient; returns `None` if one of those divisions is inexact.
    /// Over a field this never fails, over the integers it succeeds whenever
    /// the leading coefficient is a unit.
    pub fn div_rem_exact_lead(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        let dlen = divisor.len();
        if self.len() < dlen {
            return Some((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let q = top.try_div(lead)?;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j].mul_sub_assign(&q, dc);
                }
            }
            quot[i] = q;
        }
        rem.truncate(dlen - 1);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_exact_lead(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Largest `v <= cap` with `factor^v | self`, together with the cofactor.
    pub fn valuation(&self, factor: &Self, cap: usize) -> (usize, Self) {
        let mut cur = self.clone();
        let mut v = 0;
        if cur.is_zero() {
            return (cap, cur);
        }
        while v < cap {
            match cur.div_exact(factor) {
                Some(q) => {
                    cur = q;
                    v += 1;
                }
                None => break,
            }
        }
        (v, cur)
    }
}

impl<T: Field> Poly<T> {
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        self.div_rem_exact_lead(divisor)
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scale so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    /// Monic gcd by the Euclidean algorithm. The remainder is made monic at
    /// every step to keep coefficient growth in check.
    pub fn gcd_euclid(a: &Self, b: &Self) -> Self {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (mut r0, mut r1) = (m.clone(), self.rem(m)?);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree()? != 0 {
            return None;
        }
        let c = r0.coeffs[0].inv()?;
        s0.scale(&c).rem(m)
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Poly::neg(self)
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(T::from_i64(v))
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr<&Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                Poly::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::neg(self)
    }
}

/// Writes a polynomial in `var`, highest degree first: `q^2 - q + 1`.
pub(crate) fn write_terms<T: SignedCoeff>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, T)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative_coeff();
        let abs = c.abs_coeff();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = abs.is_one();
        match e {
            0 => write!(f, "{abs}")?,
            _ => {
                if !unit {
                    write!(f, "{abs}*")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<T: SignedCoeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (i as i64, c.clone()));
        write_terms(f, terms, "q")
    }
}
