//! Factored q-hypergeometric terms and their exact sums.
//!
//! Every term the verifiers meet is a rational constant times a power of q
//! times a product of binomials `(1 - q^e)`. Sums of such terms are put over
//! the binomial lcm of the denominators; since `1 - q^e = -prod_{t | e}
//! Phi_t`, reduction to lowest terms only ever needs cyclotomic valuations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gcd::to_rational;
use crate::poly::Poly;
use crate::q_objects::cyclotomic_z;
use crate::ratfun::QRational;
use crate::scalar::{int_to_rat, Ring};
use crate::{BigRat, ZPolynomial};

/// `coeff * q^shift * prod_e (1 - q^e)^mult[e]` with every `e > 0`.
///
/// Vanishing factors `1 - q^0` are counted rather than multiplied in, so a
/// product such as `(q^r; q^d)_k / (q^r; q^d)_l` with a shared zero factor
/// cancels formally. A net negative count is a pole.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QProduct {
    coeff: BigRat,
    shift: i64,
    factors: BTreeMap<u64, i64>,
    zeros: i64,
    zero_in_den: bool,
}

impl QProduct {
    pub fn constant(c: BigRat) -> Self {
        QProduct {
            coeff: c,
            shift: 0,
            factors: BTreeMap::new(),
            zeros: 0,
            zero_in_den: false,
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn zero() -> Self {
        Self::constant(BigRat::zero())
    }

    /// `c * q^e`
    pub fn monomial(c: BigRat, e: i64) -> Self {
        let mut p = Self::constant(c);
        p.shift = e;
        p
    }

    /// `(-1)^k`
    pub fn sign(k: i64) -> Self {
        Self::constant(BigRat::from_integer(
            if k.rem_euclid(2) == 0 { 1 } else { -1 }.into(),
        ))
    }

    pub fn coeff(&self) -> &BigRat {
        &self.coeff
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero() || self.zeros > 0
    }

    /// Net count of vanishing factors is negative.
    pub fn is_pole(&self) -> bool {
        !self.coeff.is_zero() && self.zeros < 0
    }

    /// Some vanishing factor was divided by, whether or not it cancelled.
    pub fn has_zero_in_den(&self) -> bool {
        self.zero_in_den
    }

    pub fn scale(mut self, c: &BigRat) -> Self {
        self.coeff *= c;
        self
    }

    pub fn times_q_pow(mut self, e: i64) -> Self {
        self.shift += e;
        self
    }

    /// Multiply by `(1 - q^e)^mult`.
    pub fn times_binomial(mut self, e: i64, mult: i64) -> Self {
        if mult == 0 {
            return self;
        }
        if e == 0 {
            self.zeros += mult;
            self.zero_in_den |= mult < 0;
            return self;
        }
        if e < 0 {
            // 1 - q^e = -q^e (1 - q^-e)
            if mult.rem_euclid(2) == 1 {
                self.coeff = -self.coeff;
            }
            self.shift += e * mult;
        }
        let slot = self.factors.entry(e.unsigned_abs()).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.factors.remove(&e.unsigned_abs());
        }
        self
    }

    /// Multiply by `[k]^mult`.
    pub fn times_q_int(self, k: i64, mult: i64) -> Self {
        self.times_binomial(k, mult).times_binomial(1, -mult)
    }

    /// Multiply by `((q^s; q^d)_k)^mult`; for negative `k` this is
    /// `1 / prod_{j=1}^{-k} (1 - q^{s - jd})`.
    pub fn times_poch(mut self, s: i64, d: i64, k: i64, mult: i64) -> Self {
        if k >= 0 {
            for j in 0..k {
                self = self.times_binomial(s + j * d, mult);
            }
        } else {
            for j in 1..=-k {
                self = self.times_binomial(s - j * d, -mult);
            }
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        out.shift += other.shift;
        out.zeros += other.zeros;
        out.zero_in_den |= other.zero_in_den;
        for (&e, &m) in &other.factors {
            let slot = out.factors.entry(e).or_insert(0);
            *slot += m;
            if *slot == 0 {
                out.factors.remove(&e);
            }
        }
        out
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QProduct {
            coeff: self.coeff.recip(),
            shift: -self.shift,
            factors: self.factors.iter().map(|(&e, &m)| (e, -m)).collect(),
            zeros: -self.zeros,
            zero_in_den: self.zero_in_den || self.zeros > 0,
        })
    }

    /// Multiplicity of each `Phi_t`, plus the sign picked up from
    /// `1 - q^e = -prod Phi_t`.
    pub fn cyclotomic_factors(&self) -> (BTreeMap<u64, i64>, bool) {
        let mut mu = BTreeMap::new();
        let mut negative = false;
        for (&e, &m) in &self.factors {
            negative ^= m.rem_euclid(2) == 1;
            for t in divisors(e) {
                *mu.entry(t).or_insert(0) += m;
            }
        }
        mu.retain(|_, m| *m != 0);
        (mu, negative)
    }

    /// Lowest-terms value; no gcd is needed because distinct cyclotomic
    /// polynomials are coprime.
    pub fn to_qrational(&self) -> Result<QRational> {
        if self.is_pole() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QRational::zero());
        }
        let (mu, negative) = self.cyclotomic_factors();
        let mut num = ZPolynomial::one();
        let mut den = ZPolynomial::one();
        for (&t, &m) in &mu {
            let phi = cyclotomic_z(t);
            for _ in 0..m.unsigned_abs() {
                if m > 0 {
                    num = num.mul(&phi);
                } else {
                    den = den.mul(&phi);
                }
            }
        }
        let c = if negative {
            -self.coeff.clone()
        } else {
            self.coeff.clone()
        };
        Ok(QRational::from_coprime(
            to_rational(&num).scale(&c),
            to_rational(&den),
            self.shift,
        ))
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `scale * q^shift * num / prod_e (1 - q^e)^den[e]`, not necessarily in
/// lowest terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QFraction {
    scale: BigRat,
    shift: i64,
    num: ZPolynomial,
    den: BTreeMap<u64, u32>,
}

impl QFraction {
    pub fn zero() -> Self {
        QFraction {
            scale: BigRat::one(),
            shift: 0,
            num: Poly::zero(),
            den: BTreeMap::new(),
        }
    }

    pub fn scale(&self) -> &BigRat {
        &self.scale
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &ZPolynomial {
        &self.num
    }

    pub fn den_binomials(&self) -> &BTreeMap<u64, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplicities of `Phi_t` in the denominator and whether the
    /// denominator equals minus that product.
    pub fn den_cyclotomic(&self) -> (BTreeMap<u64, u32>, bool) {
        let mut mu = BTreeMap::new();
        let mut negative = false;
        for (&e, &m) in &self.den {
            negative ^= m % 2 == 1;
            for t in divisors(e) {
                *mu.entry(t).or_insert(0) += m;
            }
        }
        (mu, negative)
    }

    /// Expanded denominator `prod (1 - q^e)^m`.
    pub fn den_poly(&self) -> ZPolynomial {
        let mut d = ZPolynomial::one();
        for (&e, &m) in &self.den {
            for _ in 0..m {
                d.mul_one_minus_x_pow(e as usize);
            }
        }
        d
    }

    pub fn to_qrational(&self) -> QRational {
        if self.is_zero() {
            return QRational::zero();
        }
        let (mu, negative) = self.den_cyclotomic();
        let mut num = self.num.clone();
        let mut den = ZPolynomial::one();
        for (&t, &m) in &mu {
            let phi = cyclotomic_z(t);
            let (v, rest) = num.valuation(&phi, m as usize);
            num = rest;
            for _ in v..m as usize {
                den = den.mul(&phi);
            }
        }
        let c = if negative {
            -self.scale.clone()
        } else {
            self.scale.clone()
        };
        QRational::from_coprime(to_rational(&num).scale(&c), to_rational(&den), self.shift)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.scale = -out.scale;
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&e, &m) in &other.den {
            let slot = den.entry(e).or_insert(0);
            *slot = (*slot).max(m);
        }
        let shift = self.shift.min(other.shift);
        let (scale, ints) = common_scale(&[self.scale.clone(), other.scale.clone()]);
        let lift = |f: &QFraction, c: &BigInt| {
            let mut p = f.num.scale(c).shift_up((f.shift - shift) as usize);
            for (&e, &m) in &den {
                for _ in f.den.get(&e).copied().unwrap_or(0)..m {
                    p.mul_one_minus_x_pow(e as usize);
                }
            }
            p
        };
        let num = lift(self, &ints[0]).add(&lift(other, &ints[1]));
        QFraction {
            scale,
            shift,
            num,
            den,
        }
        .normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let low = self.num.low_order();
        if low > 0 {
            self.num = self.num.shift_down(low);
            self.shift += low as i64;
        }
        self
    }
}

/// Writes rationals as `scale * ints[i]` with integer `ints`.
fn common_scale(cs: &[BigRat]) -> (BigRat, Vec<BigInt>) {
    let l = cs
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = cs
        .iter()
        .map(|c| (c * int_to_rat(&l)).to_integer())
        .collect();
    (BigRat::new(BigInt::one(), l), ints)
}

/// Exact sum of factored terms over the binomial lcm of their denominators.
pub fn sum_terms(terms: &[QProduct]) -> Result<QFraction> {
    if terms.iter().any(QProduct::is_pole) {
        return Err(Error::DivisionByZero);
    }
    let live: Vec<&QProduct> = terms.iter().filter(|t| !t.is_zero()).collect();
    if live.is_empty() {
        return Ok(QFraction::zero());
    }
    let mut den: BTreeMap<u64, u32> = BTreeMap::new();
    for t in &live {
        for (&e, &m) in &t.factors {
            if m < 0 {
                let slot = den.entry(e).or_insert(0);
                *slot = (*slot).max(m.unsigned_abs() as u32);
            }
        }
    }
    let shift = live.iter().map(|t| t.shift).min().unwrap();
    let coeffs: Vec<BigRat> = live.iter().map(|t| t.coeff.clone()).collect();
    let (scale, ints) = common_scale(&coeffs);

    let mut num = ZPolynomial::zero();
    for (t, c) in live.iter().zip(&ints) {
        let mut p = Poly::monomial(c.clone(), (t.shift - shift) as usize);
        let mut exps: BTreeMap<u64, i64> = den.iter().map(|(&e, &m)| (e, m as i64)).collect();
        for (&e, &m) in &t.factors {
            *exps.entry(e).or_insert(0) += m;
        }
        for (&e, &m) in &exps {
            debug_assert!(m >= 0);
            for _ in 0..m {
                p.mul_one_minus_x_pow(e as usize);
            }
        }
        num = add_in_place(num, &p);
    }
    Ok(QFraction {
        scale,
        shift,
        num,
        den,
    }
    .normalized())
}

fn add_in_place(acc: ZPolynomial, p: &ZPolynomial) -> ZPolynomial {
    if acc.len() >= p.len() {
        let mut cs = acc.into_coeffs();
        for (a, b) in cs.iter_mut().zip(p.coeffs()) {
            *a += b;
        }
        Poly::from_coeffs(cs)
    } else {
        add_in_place(p.clone(), &acc)
    }
}
