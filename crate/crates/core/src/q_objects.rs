//! Cyclotomic polynomials, q-integers, q-Pochhammer symbols, the WZ pair and
//! both sides of the main congruence.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bivariate::ABiRational;
use crate::error::{Error, Result};
use crate::gcd::to_rational;
use crate::product::{divisors, sum_terms, QFraction, QProduct};
use crate::ratfun::QRational;
use crate::scalar::rat;
use crate::{QLaurent, QPolynomial, ZPolynomial};

fn cyclotomic_table() -> &'static RwLock<HashMap<u64, Arc<ZPolynomial>>> {
    static TABLE: OnceLock<RwLock<HashMap<u64, Arc<ZPolynomial>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Phi_n` with integer coefficients, memoised. Concurrent callers may both
/// compute an entry; the results are identical so the fill is idempotent.
pub fn cyclotomic_z(n: u64) -> Arc<ZPolynomial> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclotomic_table().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = ZPolynomial::one_minus_x_pow(n as usize).neg();
    for t in divisors(n) {
        if t < n {
            p = p
                .div_exact(&cyclotomic_z(t))
                .expect("cyclotomic factors divide q^n - 1");
        }
    }
    let p = Arc::new(p);
    cyclotomic_table()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(p)
        .clone()
}

pub fn cyclotomic(n: u64) -> QPolynomial {
    to_rational(&cyclotomic_z(n))
}

/// `[k] = (1 - q^k) / (1 - q)` as a Laurent polynomial.
pub fn q_int(k: i64) -> QLaurent {
    if k >= 0 {
        QLaurent::from_poly(QPolynomial::from_coeffs(vec![rat(1, 1); k as usize]))
    } else {
        // [-j] = -q^-j [j]
        QLaurent::new(
            QPolynomial::from_coeffs(vec![rat(-1, 1); k.unsigned_abs() as usize]),
            k,
        )
    }
}

/// `(q^s; q^d)_k = prod_{j<k} (1 - q^{s + jd})`.
pub fn q_poch(s: i64, d: i64, k: u64) -> QLaurent {
    let mut acc = QLaurent::one();
    for j in 0..k as i64 {
        acc.mul_one_minus_x_pow(s + j * d);
    }
    acc
}

/// Which of `a q^e` or `q^e / a` sits inside the Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ASign {
    A,
    AInverse,
}

/// `(a q^e; q^d)_k` or `(q^e / a; q^d)_k` as a reduced bivariate fraction.
pub fn a_poch(e: i64, sign: ASign, d: i64, k: u64) -> ABiRational {
    ABiRational::poch(e, sign, d, k)
}

/// Gaussian binomial coefficient; zero outside `0 <= k <= n`.
pub fn q_binom(n: u64, k: i64) -> QPolynomial {
    if k < 0 || k as u64 > n {
        return QPolynomial::zero();
    }
    let k = k as u64;
    // [n, k] = [n-1, k-1] + q^k [n-1, k], row by row
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i as usize + 1);
        for j in 0..=i {
            let left = if j >= 1 {
                row[(j - 1) as usize].clone()
            } else {
                QPolynomial::zero()
            };
            let right = if j < i {
                row[j as usize].shift_up(j as usize)
            } else {
                QPolynomial::zero()
            };
            next.push(left.add(&right));
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// Least nonnegative residue of `-r/d` modulo `n`.
pub fn residue_m(n: u64, d: u64, r: i64) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParams("n and d must be positive".into()));
    }
    let (n_i, d_i) = (n as i64, d as i64);
    let eg = d_i.extended_gcd(&n_i);
    if eg.gcd != 1 {
        return Err(Error::InvalidParams(format!("gcd({n}, {d}) != 1")));
    }
    // eg.x * d = 1 mod n
    let m = ((-r % n_i) * (eg.x % n_i)).rem_euclid(n_i);
    Ok(m as u64)
}

/// `[n] * Phi_n^e`.
pub fn modulus(n: u64, e: u32) -> QPolynomial {
    let qn = q_int(n as i64).to_poly().unwrap();
    qn.mul(&cyclotomic(n).pow(e))
}

/// Modulus in factored form: `Phi_t` multiplicities of `[n] Phi_n^e`.
pub fn modulus_factors(n: u64, e: u32) -> Vec<(u64, u32)> {
    divisors(n)
        .into_iter()
        .filter(|&t| t > 1)
        .map(|t| (t, if t == n { e + 1 } else { 1 }))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MVariant {
    /// truncate at `m`
    AtM,
    /// truncate at `n - 1`
    AtNMinus1,
}

impl MVariant {
    pub fn label(self) -> &'static str {
        match self {
            MVariant::AtM => "m",
            MVariant::AtNMinus1 => "full",
        }
    }
}

impl std::str::FromStr for MVariant {
    type Err = Error;

    /// `m` and `half` name the short truncation, `full` the long one.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "half" => Ok(MVariant::AtM),
            "full" => Ok(MVariant::AtNMinus1),
            _ => Err(Error::InvalidParams(format!("unknown truncation {s:?}"))),
        }
    }
}

/// Validated `(n, d, r)` together with the truncation point `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClaimParams {
    pub n: u64,
    pub d: u64,
    pub r: i64,
    pub m: u64,
    pub variant: MVariant,
}

impl ClaimParams {
    pub fn new(n: u64, d: u64, r: i64, variant: MVariant) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidParams("n and d must be positive".into()));
        }
        if (d as i64).gcd(&r) != 1 {
            return Err(Error::InvalidParams(format!("gcd({r}, {d}) != 1")));
        }
        let m = residue_m(n, d, r)?;
        Ok(ClaimParams {
            n,
            d,
            r,
            m,
            variant,
        })
    }

    pub fn upper(&self) -> u64 {
        match self.variant {
            MVariant::AtM => self.m,
            MVariant::AtNMinus1 => self.n - 1,
        }
    }

    /// `md + r`
    pub fn e(&self) -> i64 {
        self.m as i64 * self.d as i64 + self.r
    }
}

pub(crate) fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Summand of the main sum:
/// `(-1)^k q^{d C(k+1,2) - kr} [2dk+r] (q^r;q^d)_k^3 / (q^d;q^d)_k^3`.
pub fn mainth_term(d: i64, r: i64, k: i64) -> QProduct {
    QProduct::sign(k)
        .times_q_pow(d * binom2(k + 1) - k * r)
        .times_q_int(2 * d * k + r, 1)
        .times_poch(r, d, k, 3)
        .times_poch(d, d, k, -3)
}

pub fn mainth_lhs_terms(p: &ClaimParams) -> Vec<QProduct> {
    let (d, r) = (p.d as i64, p.r);
    (0..=p.upper() as i64)
        .map(|k| mainth_term(d, r, k))
        .collect()
}

pub fn mainth_rhs_terms(p: &ClaimParams) -> Vec<QProduct> {
    let (d, r, m) = (p.d as i64, p.r, p.m as i64);
    let e = p.e();
    let lead = QProduct::sign(m).times_q_pow(d * binom2(m) + m * r);
    let mut terms = vec![lead.clone().times_q_int(e, 1)];
    for k in 1..=m {
        // (1 + q^{dk}) = (1 - q^{2dk}) / (1 - q^{dk})
        terms.push(
            lead.mul(&QProduct::sign(k))
                .times_q_pow(d * binom2(k + 1))
                .times_q_int(e, 3)
                .times_binomial(2 * d * k, 1)
                .times_binomial(d * k, -1)
                .times_q_int(k * d, -2),
        );
    }
    terms
}

pub fn mainth_lhs(p: &ClaimParams) -> QRational {
    sum_terms(&mainth_lhs_terms(p))
        .expect("no vanishing denominators")
        .to_qrational()
}

pub fn mainth_rhs(p: &ClaimParams) -> QRational {
    sum_terms(&mainth_rhs_terms(p))
        .expect("no vanishing denominators")
        .to_qrational()
}

/// `mainth_lhs - mainth_rhs` before reduction.
pub fn mainth_difference(p: &ClaimParams) -> QFraction {
    let mut terms = mainth_lhs_terms(p);
    terms.extend(
        mainth_rhs_terms(p)
            .into_iter()
            .map(|t| t.scale(&rat(-1, 1))),
    );
    sum_terms(&terms).expect("no vanishing denominators")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WzKind {
    F,
    G,
}

/// One value of the WZ pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WzTerm {
    pub kind: WzKind,
    pub k: i64,
    pub l: i64,
    pub d: i64,
    pub r: i64,
}

impl WzTerm {
    pub fn product(&self) -> QProduct {
        match self.kind {
            WzKind::F => wz_f_product(self.k, self.l, self.d, self.r),
            WzKind::G => wz_g_product(self.k, self.l, self.d, self.r),
        }
    }

    pub fn value(&self) -> Result<QRational> {
        self.product().to_qrational()
    }
}

fn wz_prefactor(k: i64, l: i64, d: i64, r: i64) -> QProduct {
    QProduct::sign(k + l).times_q_pow(d * binom2(k - l + 1) - r * k + r * l)
}

/// `F(k, l)` in factored form; `1/(q^d;q^d)_j = 0` for negative `j`.
pub fn wz_f_product(k: i64, l: i64, d: i64, r: i64) -> QProduct {
    if k - l < 0 || k < 0 {
        return QProduct::zero();
    }
    wz_prefactor(k, l, d, r)
        .times_q_int(2 * d * k + r, 1)
        .times_poch(r, d, k, 2)
        .times_poch(r, d, k + l, 1)
        .times_poch(d, d, k, -2)
        .times_poch(d, d, k - l, -1)
        .times_poch(r, d, l, -2)
}

/// `G(k, l)` in factored form.
pub fn wz_g_product(k: i64, l: i64, d: i64, r: i64) -> QProduct {
    if k - 1 < 0 || k - l < 0 {
        return QProduct::zero();
    }
    wz_prefactor(k, l, d, r)
        .times_poch(r, d, k, 2)
        .times_poch(r, d, k + l - 1, 1)
        .times_binomial(1, -1)
        .times_poch(d, d, k - 1, -2)
        .times_poch(d, d, k - l, -1)
        .times_poch(r, d, l, -2)
}

pub fn wz_f(k: i64, l: i64, d: i64, r: i64) -> Result<QRational> {
    wz_f_product(k, l, d, r).to_qrational()
}

pub fn wz_g(k: i64, l: i64, d: i64, r: i64) -> Result<QRational> {
    wz_g_product(k, l, d, r).to_qrational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn qp(cs: &[i64]) -> QPolynomial {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), qp(&[-1, 1]));
        assert_eq!(cyclotomic(2), qp(&[1, 1]));
        assert_eq!(cyclotomic(6), qp(&[1, -1, 1]));
        assert_eq!(
            cyclotomic(105)
                .coeffs()
                .iter()
                .filter(|c| **c == rat(-2, 1))
                .count(),
            2
        );
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3), QLaurent::from_poly(qp(&[1, 1, 1])));
        assert_eq!(q_int(1), QLaurent::one());
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(-2), QLaurent::new(qp(&[-1, -1]), -2));
    }

    #[test]
    fn pochhammers() {
        assert_eq!(q_poch(1, 2, 2), QLaurent::from_poly(qp(&[1, -1, 0, -1, 1])));
        assert_eq!(q_poch(7, 3, 0), QLaurent::one());
        assert_eq!(q_poch(-2, 2, 1), QLaurent::one_minus_x_pow(-2));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binom(2, 1), qp(&[1, 1]));
        assert_eq!(q_binom(5, 0), qp(&[1]));
        assert_eq!(q_binom(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert!(q_binom(3, 4).is_zero());
        assert!(q_binom(3, -1).is_zero());
    }

    #[test]
    fn truncation_points() {
        assert_eq!(residue_m(3, 2, 1), Ok(1));
        assert_eq!(residue_m(7, 1, 1), Ok(6));
        assert_eq!(residue_m(5, 2, 1), Ok(2));
        assert!(residue_m(4, 2, 1).is_err());
    }

    #[test]
    fn moduli() {
        assert_eq!(modulus(2, 2), qp(&[1, 1]).pow(3));
        assert_eq!(modulus(3, 3), qp(&[1, 1, 1]).pow(4));
        let expected = cyclotomic(2).mul(&cyclotomic(3)).mul(&cyclotomic(6).pow(2));
        assert_eq!(modulus(6, 1), expected);
    }

    #[test]
    fn wz_values() {
        for (d, r) in [(1, 1), (2, 1), (3, -2)] {
            let v = wz_f(0, 0, d, r).unwrap();
            assert_eq!(v.as_laurent(), Some(q_int(r)));
        }
        assert!(wz_f(0, 1, 2, 1).unwrap().is_zero());
        assert_eq!(wz_g(1, 1, 2, 1).unwrap(), QRational::one());
        assert!(wz_g(0, 3, 2, 1).unwrap().is_zero());
        assert!(wz_g(2, 3, 2, 1).unwrap().is_zero());
    }

    #[test]
    fn main_sum_examples() {
        // n = 3, d = 2, r = 1, M = m = 1: [1] - q [5] (q;q^2)_1^3 / (q^2;q^2)_1^3
        let p = ClaimParams::new(3, 2, 1, MVariant::AtM).unwrap();
        let expected = QRational::one().sub(
            &QRational::from_laurent(&q_int(5).mul_monomial(1))
                .mul(&QRational::from_laurent(&q_poch(1, 2, 1).pow(3)))
                .div(&QRational::from_laurent(&q_poch(2, 2, 1).pow(3)))
                .unwrap(),
        );
        assert_eq!(mainth_lhs(&p), expected);

        let p = ClaimParams::new(1, 3, 2, MVariant::AtM).unwrap();
        assert_eq!(mainth_lhs(&p), QRational::from_laurent(&q_int(2)));
        assert_eq!(mainth_rhs(&p), QRational::from_laurent(&q_int(2)));

        // r = 0 gives m = 0 and the single term [0] = 0
        let p = ClaimParams::new(2, 1, 0, MVariant::AtM).unwrap();
        assert_eq!(p.m, 0);
        assert!(mainth_lhs(&p).is_zero());
    }

    #[test]
    fn main_rhs_examples() {
        let lr = |x: QLaurent| QRational::from_laurent(&x);
        // n = 3, d = 2, r = 1: -q([3] - [3]^3 q^2 (1+q^2)/[2]^2)
        let p = ClaimParams::new(3, 2, 1, MVariant::AtM).unwrap();
        let three = lr(q_int(3));
        let inner = three.sub(
            &three
                .pow(3)
                .mul(&lr(QLaurent::from_poly(qp(&[0, 0, 1, 0, 1]))))
                .div(&lr(q_int(2)).pow(2))
                .unwrap(),
        );
        let expected = inner.mul(&lr(QLaurent::monomial(rat(-1, 1), 1)));
        assert_eq!(mainth_rhs(&p), expected);
    }
}
