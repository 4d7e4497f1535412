//! Verifiers for the individual congruences, identities and certificates.
//!
//! Every verifier returns a [`Verdict`]; parameter violations surface as
//! `Err(InvalidParams)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bivariate::{a_minus_q, horner_sum, one_minus_a_q, q_only, BiFrac};
use crate::congruence::{
    a_congruent_frac, congruent_fraction, denom_coprime, BiModulus, Verdict, Witness,
};
use crate::error::{Error, Result};
use crate::product::{sum_terms, QProduct};
use crate::q_objects::{
    binom2, mainth_difference, mainth_term, modulus, modulus_factors, wz_f_product, wz_g_product,
    ClaimParams, MVariant,
};
use crate::scalar::rat;
use crate::{BigRat, QPolynomial, ZLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    Sym3,
    ModPhi2,
    LiangduanA,
    Truncon,
    Denoms,
    Fmm,
    Gm1k,
    Identity,
    IdentityRec,
    JacksonTrunc,
    WzRelation,
    Telescoping,
    MainTh,
    Guo2018,
    Guo2022,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::Sym3,
        ClaimId::ModPhi2,
        ClaimId::LiangduanA,
        ClaimId::Truncon,
        ClaimId::Denoms,
        ClaimId::Fmm,
        ClaimId::Gm1k,
        ClaimId::Identity,
        ClaimId::IdentityRec,
        ClaimId::JacksonTrunc,
        ClaimId::WzRelation,
        ClaimId::Telescoping,
        ClaimId::MainTh,
        ClaimId::Guo2018,
        ClaimId::Guo2022,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Sym3 => "sym3",
            ClaimId::ModPhi2 => "modphi2",
            ClaimId::LiangduanA => "liangduan",
            ClaimId::Truncon => "truncon",
            ClaimId::Denoms => "denoms",
            ClaimId::Fmm => "fmm",
            ClaimId::Gm1k => "gm1k",
            ClaimId::Identity => "identity",
            ClaimId::IdentityRec => "identity_rec",
            ClaimId::JacksonTrunc => "jackson_trunc",
            ClaimId::WzRelation => "wz_relation",
            ClaimId::Telescoping => "telescoping",
            ClaimId::MainTh => "mainth",
            ClaimId::Guo2018 => "guo2018",
            ClaimId::Guo2022 => "guo2022",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown claim {s:?}")))
    }
}

fn neg(t: QProduct) -> QProduct {
    t.scale(&rat(-1, 1))
}

/// Pass iff the terms sum to zero.
fn exact_zero(terms: &[QProduct]) -> Verdict {
    match sum_terms(terms) {
        Err(_) => Verdict::inapplicable(Witness::Note("vanishing denominator".into())),
        Ok(f) if f.is_zero() => Verdict::pass(),
        Ok(f) => {
            let x = f.to_qrational();
            let mut s = x.to_string();
            if s.len() > 160 {
                s.truncate(160);
                s.push_str("...");
            }
            Verdict::fail(Witness::Note(format!("nonzero difference {s}")))
        }
    }
}

/// Congruence of the summed terms to zero modulo `prod Phi_t^e`.
fn congruent_terms(terms: &[QProduct], factors: &[(u64, u32)]) -> Verdict {
    match sum_terms(terms) {
        Err(_) => Verdict::inapplicable(Witness::Note("vanishing denominator".into())),
        Ok(f) => congruent_fraction(&f, factors),
    }
}

fn params(n: u64, d: u64, r: i64) -> Result<ClaimParams> {
    ClaimParams::new(n, d, r, MVariant::AtM)
}

fn require_n_gt_1(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams("n must exceed 1".into()));
    }
    Ok(())
}

/// Integer congruence behind the symmetry of the summation exponents.
pub fn verify_sym3(n: u64, d: u64, r: i64, k: u64) -> Result<Verdict> {
    let p = params(n, d, r)?;
    if n == 1 {
        return Ok(Verdict::pass());
    }
    if k as i64 > n as i64 - p.m as i64 - 2 {
        return Err(Error::InvalidParams(format!(
            "k = {k} outside [0, n - m - 2] with m = {}",
            p.m
        )));
    }
    let (n, d, m, k) = (n as i64, d as i64, p.m as i64, k as i64);
    let lhs = 3 * d * binom2(n - m - 1) + d * binom2(n - k) + d * k - 2 * d - 2 * k * r + 2 * r;
    let rhs = d * binom2(m + k + 2) - (m + 1 + k) * r;
    Ok(Verdict::from_integers(
        BigInt::from(lhs),
        BigInt::from(rhs),
        BigInt::from(n),
    ))
}

/// Largest admissible `k` for [`verify_sym3`], if any.
pub fn sym3_k_max(n: u64, d: u64, r: i64) -> Result<Option<u64>> {
    let p = params(n, d, r)?;
    let top = n as i64 - p.m as i64 - 2;
    Ok((top >= 0).then_some(top as u64))
}

fn qmono(c: i64, e: i64) -> ZLaurent {
    ZLaurent::monomial(BigInt::from(c), e)
}

/// `sum_{k=lo}^{hi} (-1)^k q^{d C(k+1,2) - kr} [2dk+r]
///  (a q^r, q^r/a, q^r; q^d)_k / (a q^d, q^d/a, q^d; q^d)_k`.
pub fn a_parametric_sum(d: i64, r: i64, lo: i64, hi: i64) -> BiFrac {
    // [2dk+r] = (1 - q^{2dk+r}) / (1 - q); the 1/(1 - q) goes on the end
    let c = |k: i64| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut x = qmono(sign, d * binom2(k + 1) - k * r);
        x.mul_one_minus_x_pow(2 * d * k + r);
        q_only(x)
    };
    // a^{-1} from (q^x/a) cancels between numerator and denominator
    let triple = |x: i64| {
        one_minus_a_q(x)
            .mul(&a_minus_q(x))
            .mul(&q_only(ZLaurent::one_minus_x_pow(x)))
    };
    let num = |j: i64| triple(r + (j - 1) * d);
    let den = |j: i64| triple(j * d);
    let mut s = horner_sum(lo, hi, c, num, den);
    if !s.is_zero() {
        s.den = s.den.mul(&q_only(ZLaurent::one_minus_x_pow(1)));
    }
    s
}

/// The tail `k in [m+1, n-1]` of the a-parametric sum vanishes mod
/// `Phi_n^2`.
pub fn verify_modphi2(n: u64, d: u64, r: i64) -> Result<Verdict> {
    require_n_gt_1(n)?;
    let p = params(n, d, r)?;
    let tail = a_parametric_sum(d as i64, r, p.m as i64 + 1, n as i64 - 1);
    if tail.is_zero() {
        return Ok(Verdict::pass());
    }
    a_congruent_frac(&tail, &BiModulus::new().with_cyclotomic(n, 2))
}

/// Terms of the a-parametric sum at `a = q^x`.
fn specialized_terms(d: i64, r: i64, x: i64, lo: i64, hi: i64) -> Vec<QProduct> {
    (lo..=hi)
        .map(|k| {
            QProduct::sign(k)
                .times_q_pow(d * binom2(k + 1) - k * r)
                .times_q_int(2 * d * k + r, 1)
                .times_poch(r + x, d, k, 1)
                .times_poch(r - x, d, k, 1)
                .times_poch(r, d, k, 1)
                .times_poch(d + x, d, k, -1)
                .times_poch(d - x, d, k, -1)
                .times_poch(d, d, k, -1)
        })
        .collect()
}

/// The m- and (n-1)-truncations of the a-parametric sum agree modulo
/// `[n] Phi_n (a - q^E)(1 - a q^E)`, `E = md + r`, and exactly at
/// `a = q^{±E}`.
pub fn verify_liangduan(n: u64, d: u64, r: i64) -> Result<Verdict> {
    require_n_gt_1(n)?;
    let p = params(n, d, r)?;
    let (lo, hi) = (p.m as i64 + 1, n as i64 - 1);
    if lo > hi {
        return Ok(Verdict::pass());
    }
    let e = p.e();
    let tail = a_parametric_sum(d as i64, r, lo, hi);
    let m = BiModulus::new()
        .with_factors(&modulus_factors(n, 1))
        .with_a_minus_q(e, 1)
        .with_one_minus_a_q(e, 1);
    let mut verdicts = vec![a_congruent_frac(&tail, &m)?.with_context("product modulus")];
    for x in [e, -e] {
        let v = exact_zero(&specialized_terms(d as i64, r, x, lo, hi));
        verdicts.push(v.with_context(format!("a = q^{x}")));
    }
    Ok(Verdict::all(verdicts))
}

/// The m- and (n-1)-truncated main sums agree modulo `[n] Phi_n^3`.
pub fn verify_truncon(n: u64, d: u64, r: i64) -> Result<Verdict> {
    let p = params(n, d, r)?;
    let terms: Vec<QProduct> = (p.m as i64 + 1..n as i64)
        .map(|k| mainth_term(d as i64, r, k))
        .collect();
    Ok(congruent_terms(&terms, &modulus_factors(n, 3)))
}

/// Denominators of the auxiliary products are coprime to `1 - q^n`; the
/// third family is tested against `[n] Phi_n^3`, or against `1 - q^n` when
/// `strict`.
pub fn verify_denoms(n: u64, d: u64, r: i64, strict: bool) -> Result<Verdict> {
    require_n_gt_1(n)?;
    let p = params(n, d, r)?;
    let (d, m, e) = (d as i64, p.m as i64, p.e());
    let one_minus_qn = QPolynomial::one_minus_x_pow(n as usize);
    let third = if strict {
        one_minus_qn.clone()
    } else {
        modulus(n, 3)
    };
    let check = |x: QProduct, target: &QPolynomial| match x.to_qrational() {
        Ok(v) => denom_coprime(&v, target),
        Err(_) => Verdict::inapplicable(Witness::Note("vanishing denominator".into())),
    };
    let mut verdicts = Vec::new();
    let first = QProduct::one()
        .times_poch(r, d, m, 1)
        .times_poch(r + (m + 1) * d, d, m, 1)
        .times_poch(d, d, m, -2);
    verdicts.push(check(first, &one_minus_qn).with_context("part (i)"));
    for k in 1..=m {
        let second = QProduct::one()
            .times_binomial(e, 1)
            .times_binomial(d * k, -1);
        verdicts.push(check(second, &one_minus_qn).with_context(format!("part (ii), k = {k}")));
    }
    for k in 1..=m {
        let x = QProduct::one()
            .times_q_int(e, 1)
            .times_poch(d, d, k - 1, 1)
            .times_poch(-m * d, d, k, -1);
        verdicts.push(check(x, &third).with_context(format!("part (iii), k = {k}")));
    }
    Ok(Verdict::all(verdicts))
}

/// `F(m, m)` against its closed form modulo `[n] Phi_n^3`.
pub fn verify_fmm(n: u64, d: u64, r: i64) -> Result<Verdict> {
    require_n_gt_1(n)?;
    let p = params(n, d, r)?;
    let (d, m, e) = (d as i64, p.m as i64, p.e());
    let lead = QProduct::sign(m).times_q_pow(d * binom2(m) + m * r);
    let mut terms = vec![
        wz_f_product(m, m, d, r),
        neg(lead.clone().times_q_int(e, 1)),
    ];
    for k in 1..=m {
        terms.push(
            lead.clone()
                .times_q_int(e, 3)
                .times_q_pow(d * k)
                .times_q_int(d * k, -2),
        );
    }
    Ok(congruent_terms(&terms, &modulus_factors(n, 3)))
}

/// `G(m+1, k)` against its closed form modulo `[n] Phi_n^3` for every
/// `k in [1, m]`.
pub fn verify_gm1k(n: u64, d: u64, r: i64) -> Result<Verdict> {
    require_n_gt_1(n)?;
    let p = params(n, d, r)?;
    let (d, m, e) = (d as i64, p.m as i64, p.e());
    if m == 0 {
        return Ok(Verdict::inapplicable(Witness::Note(
            "empty range: m = 0".into(),
        )));
    }
    let factors = modulus_factors(n, 3);
    let verdicts = (1..=m).map(|k| {
        let closed = QProduct::one()
            .times_q_pow(-m * d * k)
            .times_q_int(e, 3)
            .times_poch(d, d, k, 1)
            .times_q_int(d * k, -1)
            .times_q_int(d * k - (m + 1) * d, -1)
            .times_poch(-m * d, d, k, -1);
        congruent_terms(&[wz_g_product(m + 1, k, d, r), neg(closed)], &factors)
            .with_context(format!("k = {k}"))
    });
    Ok(Verdict::all(verdicts))
}

/// `sum_{k=1}^n (-1)^k q^{C(k+1,2)} (1+q^k)/[k]^2 + sum_{k=1}^n q^k/[k]^2`.
fn identity_rhs_terms(n: i64) -> Vec<QProduct> {
    let mut terms = Vec::new();
    for k in 1..=n {
        terms.push(
            QProduct::sign(k)
                .times_q_pow(binom2(k + 1))
                .times_binomial(2 * k, 1)
                .times_binomial(k, -1)
                .times_q_int(k, -2),
        );
        terms.push(QProduct::one().times_q_pow(k).times_q_int(k, -2));
    }
    terms
}

/// Exact identity between the reciprocal Pochhammer sum and the harmonic
/// type sums.
pub fn verify_identity(n: u64) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    let n = n as i64;
    let lead = QProduct::sign(n).times_q_pow(binom2(n + 1));
    let mut terms: Vec<QProduct> = (1..=n)
        .map(|k| {
            lead.clone()
                .times_q_pow(-n * k)
                .times_poch(1, 1, k, 1)
                .times_q_int(k, -1)
                .times_q_int(k - n - 1, -1)
                .times_poch(-n, 1, k, -1)
        })
        .collect();
    terms.extend(identity_rhs_terms(n).into_iter().map(neg));
    Ok(exact_zero(&terms))
}

/// `S_n` written with Gaussian binomials.
fn s_terms(n: i64) -> Vec<QProduct> {
    let lead = QProduct::sign(n).times_q_pow(binom2(n + 1));
    (1..=n)
        .map(|k| {
            // 1 / qbinom(n, k) = (q;q)_k (q;q)_{n-k} / (q;q)_n
            lead.mul(&QProduct::sign(k))
                .times_q_pow(-binom2(k))
                .times_q_int(k, -1)
                .times_q_int(k - n - 1, -1)
                .times_poch(1, 1, k, 1)
                .times_poch(1, 1, n - k, 1)
                .times_poch(1, 1, n, -1)
        })
        .collect()
}

/// `S_{n+1} - S_n` equals the claimed increment.
pub fn verify_identity_rec(n: u64) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    let n = n as i64;
    let mut terms = s_terms(n + 1);
    terms.extend(s_terms(n).into_iter().map(neg));
    terms.push(neg(QProduct::one()
        .times_q_pow(n + 1)
        .times_q_int(n + 1, -2)));
    terms.push(neg(QProduct::sign(n + 1)
        .times_q_pow(binom2(n + 2))
        .times_binomial(2 * (n + 1), 1)
        .times_binomial(n + 1, -1)
        .times_q_int(n + 1, -2)));
    Ok(exact_zero(&terms))
}

/// Terminating specialization of the very-well-poised sum.
pub fn verify_jackson_trunc(n: u64, d: u64, r: i64) -> Result<Verdict> {
    let p = params(n, d, r)?;
    let (d, m, e) = (d as i64, p.m as i64, p.e());
    let mut terms: Vec<QProduct> = (0..=m)
        .map(|k| {
            QProduct::sign(k)
                .times_q_pow(d * binom2(k + 1) - k * r)
                .times_q_int(2 * d * k + r, 1)
                .times_poch(-m * d, d, k, 1)
                .times_poch(e + r, d, k, 1)
                .times_poch(r, d, k, 1)
                .times_poch(e + d, d, k, -1)
                .times_poch(d - e, d, k, -1)
                .times_poch(d, d, k, -1)
        })
        .collect();
    terms.push(neg(QProduct::one()
        .times_q_int(r, 1)
        .times_poch(d + r, d, m, 1)
        .times_poch(d - e, d, m, -1)));
    if terms.iter().any(|t| t.has_zero_in_den()) {
        return Ok(Verdict::inapplicable(Witness::Note(
            "zero factor in a denominator".into(),
        )));
    }
    Ok(exact_zero(&terms))
}

/// `F(k, l-1) - F(k, l) = G(k+1, l) - G(k, l)` on `[0, kmax] x [1, lmax]`.
pub fn verify_wz_relation(d: u64, r: i64, kmax: u64, lmax: u64) -> Result<Verdict> {
    if d == 0 || kmax < 1 || lmax < 1 {
        return Err(Error::InvalidParams("need d, kmax, lmax >= 1".into()));
    }
    let d = d as i64;
    for k in 0..=kmax as i64 {
        for l in 1..=lmax as i64 {
            let terms = [
                wz_f_product(k, l - 1, d, r),
                neg(wz_f_product(k, l, d, r)),
                neg(wz_g_product(k + 1, l, d, r)),
                wz_g_product(k, l, d, r),
            ];
            let v = exact_zero(&terms);
            if !v.is_pass() {
                return Ok(v.with_context(format!("(k, l) = ({k}, {l})")));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Summing the WZ relation: `sum_k F(k, 0) = F(m, m) + sum_k G(m+1, k)`.
pub fn verify_telescoping(n: u64, d: u64, r: i64) -> Result<Verdict> {
    let p = params(n, d, r)?;
    let (d, m) = (d as i64, p.m as i64);
    let mut terms: Vec<QProduct> = (0..=m).map(|k| wz_f_product(k, 0, d, r)).collect();
    terms.push(neg(wz_f_product(m, m, d, r)));
    terms.extend((1..=m).map(|k| neg(wz_g_product(m + 1, k, d, r))));
    Ok(exact_zero(&terms))
}

/// The main congruence modulo `[n] Phi_n^3`.
pub fn verify_mainth(n: u64, d: u64, r: i64, variant: MVariant) -> Result<Verdict> {
    let p = ClaimParams::new(n, d, r, variant)?;
    Ok(congruent_fraction(
        &mainth_difference(&p),
        &modulus_factors(n, 3),
    ))
}

fn require_odd(n: u64) -> Result<i64> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("n = {n} must be odd and > 1")));
    }
    Ok(n as i64)
}

fn guo_lhs(upper: i64) -> Vec<QProduct> {
    (0..=upper).map(|k| mainth_term(2, 1, k)).collect()
}

/// The q-analogue of (B.2) modulo `[n] Phi_n^2`.
pub fn verify_guo2018(n: u64) -> Result<Verdict> {
    let n = require_odd(n)?;
    let h = (n - 1) / 2;
    let mut terms = guo_lhs(h);
    terms.push(neg(QProduct::sign(h)
        .times_q_pow((n - 1) * (n - 1) / 4)
        .times_q_int(n, 1)));
    Ok(congruent_terms(&terms, &modulus_factors(n as u64, 2)))
}

/// The refined q-analogue modulo `[n] Phi_n^3`, truncated at `(n-1)/2`
/// (`AtM`) or `n - 1`.
pub fn verify_guo2022(n: u64, variant: MVariant) -> Result<Verdict> {
    let n = require_odd(n)?;
    let h = (n - 1) / 2;
    let upper = match variant {
        MVariant::AtM => h,
        MVariant::AtNMinus1 => n - 1,
    };
    let mut terms = guo_lhs(upper);
    let lead = QProduct::sign(h).times_q_pow((1 - n * n) / 4);
    terms.push(neg(lead.clone().times_q_pow(binom2(n)).times_q_int(n, 1)));
    // (n^2-1)/24 (1-q)^2 [n]^3 = (n^2-1)/24 (1-q^n)^3 / (1-q)
    let c = BigRat::new(BigInt::from(n * n - 1), BigInt::from(24));
    terms.push(neg(lead
        .scale(&c)
        .times_binomial(n, 3)
        .times_binomial(1, -1)));
    for k in 1..=h {
        terms.push(neg(QProduct::one()
            .times_q_int(n, 3)
            .times_q_pow(k)
            .times_poch(2, 2, k, 1)
            .times_q_int(2 * k, -1)
            .times_q_int(2 * k - 1, -1)
            .times_poch(1, 2, k, -1)));
    }
    Ok(congruent_terms(&terms, &modulus_factors(n as u64, 3)))
}

/// `sum_{k=0}^m F(k, 0)`, which is the m-truncated main sum.
pub fn telescoping_lhs(p: &ClaimParams) -> Result<crate::ratfun::QRational> {
    let terms: Vec<QProduct> = (0..=p.m as i64)
        .map(|k| wz_f_product(k, 0, p.d as i64, p.r))
        .collect();
    Ok(sum_terms(&terms)?.to_qrational())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Status;
    use crate::q_objects::mainth_lhs;

    fn pass(v: Result<Verdict>) -> bool {
        v.unwrap().is_pass()
    }

    #[test]
    fn sym3_examples() {
        assert!(pass(verify_sym3(3, 2, 1, 0)));
        assert!(pass(verify_sym3(1, 3, 2, 7)));
        for n in 2..=10u64 {
            for d in 1..=6u64 {
                for r in -6..=6i64 {
                    let Ok(Some(top)) = sym3_k_max(n, d, r) else {
                        continue;
                    };
                    for k in 0..=top {
                        assert!(pass(verify_sym3(n, d, r, k)), "{n} {d} {r} {k}");
                    }
                }
            }
        }
        assert!(verify_sym3(3, 2, 1, 1).is_err());
    }

    #[test]
    fn modphi2_examples() {
        assert!(pass(verify_modphi2(3, 2, 1)));
        assert!(pass(verify_modphi2(4, 1, 1)));
        assert!(pass(verify_modphi2(5, 2, 1)));
        assert!(verify_modphi2(1, 2, 1).is_err());
    }

    #[test]
    fn liangduan_examples() {
        assert!(pass(verify_liangduan(3, 2, 1)));
        assert!(pass(verify_liangduan(4, 1, 1)));
        assert!(pass(verify_liangduan(5, 3, 2)));
    }

    #[test]
    fn truncon_examples() {
        assert!(pass(verify_truncon(3, 2, 1)));
        assert!(pass(verify_truncon(1, 2, 1)));
        assert!(pass(verify_truncon(7, 3, -1)));
    }

    #[test]
    fn denoms_examples() {
        assert!(pass(verify_denoms(3, 2, 1, false)));
        assert!(pass(verify_denoms(4, 1, 0, false)));
        let v = verify_denoms(3, 2, 1, true).unwrap();
        assert_eq!(v.status, Status::Fail);
        let w = v.witness.unwrap();
        assert_eq!(w.to_string(), "part (iii), k = 1: common factor q - 1");
    }

    #[test]
    fn fmm_and_gm1k_examples() {
        assert!(pass(verify_fmm(3, 2, 1)));
        assert!(pass(verify_fmm(2, 1, 0)));
        assert!(pass(verify_fmm(5, 2, 1)));
        assert!(pass(verify_gm1k(3, 2, 1)));
        assert!(pass(verify_gm1k(5, 2, 1)));
        assert!(pass(verify_gm1k(2, 1, 1)));
        assert_eq!(verify_gm1k(2, 1, 0).unwrap().status, Status::Inapplicable);
    }

    #[test]
    fn identity_examples() {
        for n in 1..=4 {
            assert!(pass(verify_identity(n)), "{n}");
            assert!(pass(verify_identity_rec(n)), "{n}");
        }
    }

    #[test]
    fn jackson_and_telescoping_examples() {
        assert!(pass(verify_jackson_trunc(2, 1, 0)));
        assert!(pass(verify_jackson_trunc(3, 2, 1)));
        assert!(pass(verify_jackson_trunc(7, 3, 2)));
        assert!(pass(verify_telescoping(2, 1, 0)));
        assert!(pass(verify_telescoping(3, 2, 1)));
        assert!(pass(verify_telescoping(5, 4, 3)));
    }

    #[test]
    fn telescoping_left_side_is_main_sum() {
        for (n, d, r) in [(3, 2, 1), (5, 4, 3), (7, 3, -1)] {
            let p = ClaimParams::new(n, d, r, MVariant::AtM).unwrap();
            assert_eq!(telescoping_lhs(&p).unwrap(), mainth_lhs(&p));
        }
    }

    #[test]
    fn wz_examples() {
        assert!(pass(verify_wz_relation(2, 1, 1, 1)));
        assert!(pass(verify_wz_relation(1, 1, 5, 5)));
        assert!(pass(verify_wz_relation(2, -1, 4, 4)));
    }

    #[test]
    fn mainth_examples() {
        for v in [MVariant::AtM, MVariant::AtNMinus1] {
            assert!(pass(verify_mainth(1, 3, 2, v)));
        }
        assert!(pass(verify_mainth(3, 2, 1, MVariant::AtM)));
        assert!(pass(verify_mainth(4, 3, 1, MVariant::AtNMinus1)));
        assert!(pass(verify_mainth(6, 5, 2, MVariant::AtM)));
        assert!(verify_mainth(4, 2, 1, MVariant::AtM).is_err());
    }

    #[test]
    fn guo_examples() {
        assert!(pass(verify_guo2018(3)));
        assert!(pass(verify_guo2018(5)));
        assert!(verify_guo2018(4).is_err());
        assert!(pass(verify_guo2022(3, MVariant::AtM)));
        assert!(pass(verify_guo2022(5, MVariant::AtNMinus1)));
        assert!(verify_guo2022(2, MVariant::AtM).is_err());
    }

    #[test]
    fn claim_names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
        }
        assert!("nope".parse::<ClaimId>().is_err());
    }
}
