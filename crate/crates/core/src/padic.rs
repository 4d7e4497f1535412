//! Rational p-adic arithmetic, Euler polynomials, and the classical
//! supercongruences at concrete primes.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::congruence::Verdict;
use crate::error::{Error, Result};
use crate::q_objects::MVariant;
use crate::scalar::rat;
use crate::{BigRat, QPolynomial};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn int_vp(x: &BigInt, p: &BigInt) -> i64 {
    let mut x = x.abs();
    let mut v = 0;
    while (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

/// p-adic valuation; `None` stands for `+∞`.
pub fn vp(x: &BigRat, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    Some(int_vp(x.numer(), &p) - int_vp(x.denom(), &p))
}

/// Residue of a p-adic integer modulo `p^t`, in `[0, p^t)`.
pub fn mod_pow(x: &BigRat, p: u64, t: u32) -> Result<BigInt> {
    if vp(x, p).is_some_and(|v| v < 0) {
        return Err(Error::NotPAdicInteger);
    }
    let m = num_traits::pow(BigInt::from(p), t as usize);
    let inv = x.denom().mod_floor(&m).extended_gcd(&m).x.mod_floor(&m);
    Ok((x.numer() * inv).mod_floor(&m))
}

/// Least nonnegative residue of `-alpha` modulo `p`.
pub fn neg_residue(alpha: &BigRat, p: u64) -> Result<u64> {
    let r = mod_pow(&-alpha.clone(), p, 1)?;
    Ok(r.to_u64().unwrap())
}

fn euler_table() -> &'static RwLock<Vec<QPolynomial>> {
    static TABLE: OnceLock<RwLock<Vec<QPolynomial>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

fn binomial(k: usize, j: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * (k - i) / (i + 1);
    }
    acc
}

/// Coefficients of `E_k(x)`, memoised.
pub fn euler_poly_coeffs(k: usize) -> QPolynomial {
    if let Some(p) = euler_table().read().unwrap().get(k) {
        return p.clone();
    }
    let mut table = euler_table().write().unwrap();
    while table.len() <= k {
        let n = table.len();
        // E_n = x^n - 1/2 sum_{j<n} C(n,j) E_j
        let mut acc = QPolynomial::monomial(rat(1, 1), n);
        for (j, e) in table.iter().enumerate() {
            let c = BigRat::new(binomial(n, j), big(2));
            acc = acc.sub(&e.scale(&c));
        }
        table.push(acc);
    }
    table[k].clone()
}

pub fn euler_poly(k: usize, x: &BigRat) -> BigRat {
    euler_poly_coeffs(k).eval(x)
}

/// `E_k = 2^k E_k(1/2)`.
pub fn euler_number(k: usize) -> BigRat {
    let two_k = num_traits::pow(BigInt::from(2), k);
    euler_poly(k, &rat(1, 2)) * BigRat::from_integer(two_k)
}

/// Rising factorial `x (x+1) ... (x+k-1)`.
pub fn poch_rat(x: &BigRat, k: u64) -> BigRat {
    let mut acc = BigRat::one();
    let mut f = x.clone();
    for _ in 0..k {
        acc *= &f;
        f += BigRat::one();
    }
    acc
}

/// A prime `p > 3` and a target modulus `p^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicParams {
    pub p: u64,
    pub s: u32,
    pub t: u32,
}

impl PadicParams {
    pub fn new(p: u64, s: u32, t: u32) -> Result<Self> {
        if p <= 3 || !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not a prime > 3")));
        }
        if s == 0 || t == 0 {
            return Err(Error::InvalidParams("s and t must be positive".into()));
        }
        Ok(PadicParams { p, s, t })
    }

    pub fn modulus(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.t as usize)
    }
}

/// `sum_{k=0}^{upper} (-1)^k (2dk + r) ((r/d)_k / k!)^3`, where the factor
/// `2dk + r` is divided by `d`, i.e. `(2k + alpha)` with `alpha = r/d`.
fn hyper_sum(alpha: &BigRat, upper: u64) -> BigRat {
    let mut acc = BigRat::zero();
    let mut ratio = BigRat::one();
    for k in 0..=upper {
        if k > 0 {
            // (alpha)_k / k! from the previous term
            ratio = ratio * (alpha + BigRat::from_integer(big(k as i64 - 1)))
                / BigRat::from_integer(big(k as i64));
        }
        let term = (BigRat::from_integer(big(2 * k as i64)) + alpha) * ratio.pow(3);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn sign(k: u64) -> BigRat {
    if k.is_multiple_of(2) {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

fn compare(lhs: &BigRat, rhs: &BigRat, params: &PadicParams) -> Result<Verdict> {
    let l = mod_pow(lhs, params.p, params.t)?;
    let r = mod_pow(rhs, params.p, params.t)?;
    Ok(Verdict::from_integers(l, r, params.modulus()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanHamme {
    B2,
    E2,
    F2,
}

impl std::str::FromStr for VanHamme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B2" | "b2" => Ok(VanHamme::B2),
            "E2" | "e2" => Ok(VanHamme::E2),
            "F2" | "f2" => Ok(VanHamme::F2),
            _ => Err(Error::InvalidParams(format!("unknown variant {s:?}"))),
        }
    }
}

/// Left side of a Van Hamme congruence, exactly.
pub fn vanhamme_lhs(p: u64, variant: VanHamme) -> BigRat {
    let den = match variant {
        VanHamme::B2 => 2,
        VanHamme::E2 => 3,
        VanHamme::F2 => 4,
    };
    // (-1)^k (2 den k + 1) = den (2k + 1/den)
    hyper_sum(&rat(1, den), (p - 1) / den as u64) * rat(den, 1)
}

pub fn verify_vanhamme(p: u64, variant: VanHamme) -> Result<Verdict> {
    let params = PadicParams::new(p, 1, 3)?;
    let pr = rat(p as i64, 1);
    let rhs = match variant {
        VanHamme::B2 => pr * sign((p - 1) / 2),
        VanHamme::E2 if p % 3 == 1 => pr,
        VanHamme::F2 if p % 4 == 1 => pr * sign((p - 1) / 4),
        _ => {
            return Err(Error::InvalidParams(format!(
                "{variant:?} needs a different residue class of p = {p}"
            )))
        }
    };
    compare(&vanhamme_lhs(p, variant), &rhs, &params)
}

/// `p (-1)^{(p-1)/2} + p^3 E_{p-3}`.
pub fn sun_rhs(p: u64) -> BigRat {
    let pr = rat(p as i64, 1);
    &pr * sign((p - 1) / 2) + pr.pow(3) * euler_number(p as usize - 3)
}

pub fn sun_lhs(p: u64, variant: MVariant) -> BigRat {
    let upper = match variant {
        MVariant::AtM => (p - 1) / 2,
        MVariant::AtNMinus1 => p - 1,
    };
    hyper_sum(&rat(1, 2), upper) * rat(2, 1)
}

pub fn verify_sun(p: u64, variant: MVariant) -> Result<Verdict> {
    let params = PadicParams::new(p, 1, 4)?;
    compare(&sun_lhs(p, variant), &sun_rhs(p), &params)
}

/// `(-1)^a (alpha + a) + (alpha + a)^3 E_{p-3}(alpha)` with
/// `a = <-alpha>_p`.
pub fn alpha_rhs(p: u64, alpha: &BigRat) -> Result<BigRat> {
    let a = neg_residue(alpha, p)?;
    let x = alpha + rat(a as i64, 1);
    Ok(&x * sign(a) + x.pow(3) * euler_poly(p as usize - 3, alpha))
}

pub fn verify_alpha(p: u64, alpha: &BigRat, variant: MVariant) -> Result<Verdict> {
    let params = PadicParams::new(p, 1, 4)?;
    let a = neg_residue(alpha, p)?;
    let upper = match variant {
        MVariant::AtM => a,
        MVariant::AtNMinus1 => p - 1,
    };
    compare(&hyper_sum(alpha, upper), &alpha_rhs(p, alpha)?, &params)
}

/// `sum_{k=1}^m (-1)^k / k^2`.
pub fn alternating_square_sum(m: u64) -> BigRat {
    (1..=m)
        .map(|k| sign(k) / rat(k as i64 * k as i64, 1))
        .fold(BigRat::zero(), |a, b| a + b)
}

fn prime_power_m(p: u64, s: u32, d: u64, r: i64) -> Result<u64> {
    if d.is_multiple_of(p) {
        return Err(Error::InvalidParams(format!("p = {p} divides d = {d}")));
    }
    if (d as i64).gcd(&r) != 1 {
        return Err(Error::InvalidParams(format!("gcd({r}, {d}) != 1")));
    }
    let alpha = rat(r, d as i64);
    let m = mod_pow(&-alpha, p, s)?;
    Ok(m.to_u64().unwrap())
}

/// `(-1)^m (md + r) + 2 (-1)^m (md + r)^3 / d^2 sum_{k=1}^m (-1)^k / k^2`.
pub fn prime_power_rhs(p: u64, s: u32, d: u64, r: i64) -> Result<BigRat> {
    let m = prime_power_m(p, s, d, r)?;
    let e = rat(m as i64 * d as i64 + r, 1);
    let sg = sign(m);
    let d2 = rat(d as i64 * d as i64, 1);
    Ok(&e * &sg + rat(2, 1) * sg * e.pow(3) / d2 * alternating_square_sum(m))
}

pub fn prime_power_lhs(p: u64, s: u32, d: u64, r: i64, variant: MVariant) -> Result<BigRat> {
    let m = prime_power_m(p, s, d, r)?;
    let upper = match variant {
        MVariant::AtM => m,
        MVariant::AtNMinus1 => num_traits::pow(p, s as usize) - 1,
    };
    Ok(hyper_sum(&rat(r, d as i64), upper) * rat(d as i64, 1))
}

/// The prime-power congruence modulo `p^{s+3}`.
pub fn verify_prime_power(p: u64, s: u32, d: u64, r: i64, variant: MVariant) -> Result<Verdict> {
    let params = PadicParams::new(p, s, s + 3)?;
    let lhs = prime_power_lhs(p, s, d, r, variant)?;
    compare(&lhs, &prime_power_rhs(p, s, d, r)?, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Status;

    #[test]
    fn valuations() {
        assert_eq!(vp(&rat(50, 3), 5), Some(2));
        assert_eq!(vp(&rat(1, 25), 5), Some(-2));
        assert_eq!(vp(&rat(0, 1), 7), None);
    }

    #[test]
    fn residues() {
        assert_eq!(mod_pow(&rat(435, 512), 5, 3), Ok(big(5)));
        assert_eq!(mod_pow(&rat(-120, 1), 5, 4), Ok(big(505)));
        assert_eq!(mod_pow(&rat(1, 5), 5, 2), Err(Error::NotPAdicInteger));
        assert_eq!(neg_residue(&rat(1, 2), 5), Ok(2));
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_poly(1, &rat(1, 2)), rat(0, 1));
        assert_eq!(euler_number(2), rat(-1, 1));
        assert_eq!(euler_poly(2, &rat(1, 3)), rat(-2, 9));
        assert_eq!(euler_number(4), rat(5, 1));
        assert_eq!(euler_number(6), rat(-61, 1));
    }

    #[test]
    fn pochhammers() {
        assert_eq!(poch_rat(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(poch_rat(&rat(7, 5), 0), rat(1, 1));
        assert_eq!(poch_rat(&rat(1, 3), 3), rat(28, 27));
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn vanhamme_examples() {
        assert_eq!(vanhamme_lhs(5, VanHamme::B2), rat(435, 512));
        assert!(verify_vanhamme(5, VanHamme::B2).unwrap().is_pass());
        assert!(verify_vanhamme(7, VanHamme::E2).unwrap().is_pass());
        assert!(verify_vanhamme(5, VanHamme::E2).is_err());
        assert!(verify_vanhamme(9, VanHamme::B2).is_err());
    }

    #[test]
    fn sun_examples() {
        assert_eq!(mod_pow(&sun_lhs(5, MVariant::AtM), 5, 4), Ok(big(505)));
        assert_eq!(sun_rhs(5), rat(-120, 1));
        assert!(verify_sun(5, MVariant::AtM).unwrap().is_pass());
        assert!(verify_sun(5, MVariant::AtNMinus1).unwrap().is_pass());
        assert!(verify_sun(7, MVariant::AtM).unwrap().is_pass());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(hyper_sum(&rat(1, 1), 4), rat(5, 1));
        assert!(verify_alpha(5, &rat(1, 1), MVariant::AtNMinus1)
            .unwrap()
            .is_pass());
        assert!(verify_alpha(5, &rat(1, 2), MVariant::AtM)
            .unwrap()
            .is_pass());
        assert_eq!(
            verify_alpha(5, &rat(1, 5), MVariant::AtM),
            Err(Error::NotPAdicInteger)
        );
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power_rhs(5, 1, 2, 1), Ok(rat(-335, 8)));
        assert_eq!(mod_pow(&rat(-335, 8), 5, 4), Ok(big(505)));
        for v in [MVariant::AtM, MVariant::AtNMinus1] {
            assert!(verify_prime_power(5, 1, 2, 1, v).unwrap().is_pass());
        }
        assert!(verify_prime_power(7, 1, 3, 1, MVariant::AtM)
            .unwrap()
            .is_pass());
        let v = verify_prime_power(5, 2, 2, 1, MVariant::AtM).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert!(verify_prime_power(5, 1, 10, 1, MVariant::AtM).is_err());
    }
}
