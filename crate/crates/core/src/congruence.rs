//! Congruences of rational functions modulo polynomials.
//!
//! `x ≡ y (mod M)` means: with `x - y = N / D` in lowest terms, `D` is
//! coprime to `M` and `M | N`. When `D` shares a factor with `M` the
//! question has no answer and the verdict is `Inapplicable`. Powers of `q`
//! are units for every modulus used here and are cleared first.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::bivariate::{div_a_minus_q, specialize_a_int, ABiRational, BiFrac};
use crate::error::{Error, Result};
use crate::gcd::{certainly_coprime, clear_denominators, poly_gcd, to_rational};
use crate::poly::Poly;
use crate::product::QFraction;
use crate::q_objects::cyclotomic_z;
use crate::ratfun::QRational;
use crate::scalar::{rat, Ring};
use crate::{BiLaurent, QPolynomial, ZLaurent, ZPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Residue of the difference modulo the modulus.
    Residue(QPolynomial),
    /// Factor shared by a denominator and the modulus.
    CommonFactor(QPolynomial),
    /// Integer congruence that does not hold.
    Integers {
        lhs: BigInt,
        rhs: BigInt,
        modulus: BigInt,
    },
    Note(String),
    /// Where in a larger check the inner witness arose.
    At {
        context: String,
        inner: Box<Witness>,
    },
}

impl Witness {
    pub fn at(context: impl Into<String>, inner: Witness) -> Witness {
        Witness::At {
            context: context.into(),
            inner: Box::new(inner),
        }
    }

    /// The innermost witness.
    pub fn leaf(&self) -> &Witness {
        match self {
            Witness::At { inner, .. } => inner.leaf(),
            w => w,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Residue(p) => write!(f, "residue {p}"),
            Witness::CommonFactor(p) => write!(f, "common factor {p}"),
            Witness::Integers { lhs, rhs, modulus } => {
                write!(f, "{lhs} != {rhs} mod {modulus}")
            }
            Witness::Note(s) => f.write_str(s),
            Witness::At { context, inner } => write!(f, "{context}: {inner}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            status: Status::Pass,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict {
            status: Status::Fail,
            witness: Some(w),
            elapsed: Duration::ZERO,
        }
    }

    pub fn inapplicable(w: Witness) -> Self {
        Verdict {
            status: Status::Inapplicable,
            witness: Some(w),
            elapsed: Duration::ZERO,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Pass or a failure carrying an integer mismatch.
    pub fn from_integers(lhs: BigInt, rhs: BigInt, modulus: BigInt) -> Self {
        let diff: BigInt = &lhs - &rhs;
        if num_integer::Integer::is_multiple_of(&diff, &modulus) {
            Self::pass()
        } else {
            Self::fail(Witness::Integers { lhs, rhs, modulus })
        }
    }

    pub fn with_context(mut self, context: impl Into<String>) -> Self {
        if let Some(w) = self.witness.take() {
            self.witness = Some(Witness::at(context, w));
        }
        self
    }

    /// Runs `f` and records its wall time.
    pub fn timed(f: impl FnOnce() -> Verdict) -> Verdict {
        let start = Instant::now();
        let mut v = f();
        v.elapsed = start.elapsed();
        v
    }

    /// The first verdict that is not a pass, or a pass.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        for v in verdicts {
            if !v.is_pass() {
                return v;
            }
        }
        Verdict::pass()
    }
}

fn check_modulus(m: &QPolynomial) -> Result<()> {
    if m.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidModulus(format!("constant modulus {m}")));
    }
    Ok(())
}

fn q_poly() -> QPolynomial {
    Poly::monomial(rat(1, 1), 1)
}

/// `q^s mod m`, for `q` a unit modulo `m`.
fn q_power_mod(s: i64, m: &QPolynomial) -> Option<QPolynomial> {
    let base = if s >= 0 {
        q_poly()
    } else {
        q_poly().inverse_mod(m)?
    };
    let mut acc = QPolynomial::one().rem(m)?;
    for _ in 0..s.unsigned_abs() {
        acc = acc.mul(&base).rem(m)?;
    }
    Some(acc)
}

/// Residue of `q^shift * num / den` modulo `m`; `den` must be invertible.
fn residue(num: &QPolynomial, den: &QPolynomial, shift: i64, m: &QPolynomial) -> QPolynomial {
    let inv = den.inverse_mod(m).expect("denominator is a unit");
    let qs = q_power_mod(shift, m).expect("q is a unit");
    num.rem(m)
        .unwrap()
        .mul(&inv)
        .rem(m)
        .unwrap()
        .mul(&qs)
        .rem(m)
        .unwrap()
}

/// `x ≡ y (mod m)` for rational functions in `q`.
pub fn congruent(x: &QRational, y: &QRational, m: &QPolynomial) -> Result<Verdict> {
    check_modulus(m)?;
    let diff = x.sub(y);
    if diff.is_zero() {
        return Ok(Verdict::pass());
    }
    if let Some(v) = q_not_unit(&diff, m) {
        return Ok(v);
    }
    let g = poly_gcd(diff.den(), m);
    if !g.is_constant() {
        return Ok(Verdict::inapplicable(Witness::CommonFactor(g)));
    }
    let r = residue(diff.num(), diff.den(), diff.shift(), m);
    Ok(if r.is_zero() {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::Residue(r))
    })
}

/// A negative power of `q` against a modulus divisible by `q`.
fn q_not_unit(x: &QRational, m: &QPolynomial) -> Option<Verdict> {
    (x.shift() < 0 && m.coeff(0).is_zero())
        .then(|| Verdict::inapplicable(Witness::CommonFactor(q_poly())))
}

/// Whether the reduced denominator of `x` is coprime to `m`.
pub fn denom_coprime(x: &QRational, m: &QPolynomial) -> Verdict {
    if let Some(v) = q_not_unit(x, m) {
        return v;
    }
    let g = poly_gcd(x.den(), m);
    if g.is_constant() {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::CommonFactor(g))
    }
}

/// Modulus given as `prod Phi_t^e` over `(t, e)` pairs.
pub fn cyclotomic_product(factors: &[(u64, u32)]) -> QPolynomial {
    let mut m = ZPolynomial::one();
    for &(t, e) in factors {
        for _ in 0..e {
            m = m.mul(&cyclotomic_z(t));
        }
    }
    to_rational(&m)
}

/// Congruence of a factored sum against `prod Phi_t^e` with `t >= 1`.
///
/// The denominator of a [`QFraction`] is a product of cyclotomic
/// polynomials, so lowest terms only need `Phi_t`-adic valuations of the
/// numerator.
pub fn congruent_fraction(x: &QFraction, factors: &[(u64, u32)]) -> Verdict {
    if x.is_zero() {
        return Verdict::pass();
    }
    let (mu, _) = x.den_cyclotomic();
    let mut num = x.num().clone();
    let mut shared = ZPolynomial::one();
    for &(t, _) in factors {
        let need = mu.get(&t).copied().unwrap_or(0);
        if need == 0 {
            continue;
        }
        let phi = cyclotomic_z(t);
        let (v, rest) = num.valuation(&phi, need as usize);
        num = rest;
        for _ in v..need as usize {
            shared = shared.mul(&phi);
        }
    }
    if !shared.is_one() {
        return Verdict::inapplicable(Witness::CommonFactor(to_rational(&shared).monic()));
    }
    let mut ok = true;
    for &(t, e) in factors {
        let (v, _) = num.valuation(&cyclotomic_z(t), e as usize);
        ok &= v == e as usize;
    }
    if ok {
        return Verdict::pass();
    }
    // reduced denominator: cyclotomic factors not in the modulus
    let m = cyclotomic_product(factors);
    let mut den = QPolynomial::one();
    for (&t, &k) in &mu {
        if !factors.iter().any(|&(s, _)| s == t) {
            let phi = to_rational(&cyclotomic_z(t)).rem(&m).unwrap();
            for _ in 0..k {
                den = den.mul(&phi).rem(&m).unwrap();
            }
        }
    }
    let (_, neg) = x.den_cyclotomic();
    let c = if neg {
        -x.scale().clone()
    } else {
        x.scale().clone()
    };
    let r = residue(&to_rational(&num).scale(&c), &den, x.shift(), &m);
    Verdict::fail(Witness::Residue(r))
}

fn unit_lead(p: &ZPolynomial) -> bool {
    p.leading()
        .is_some_and(|c| c == &BigInt::from(1) || c == &BigInt::from(-1))
}

fn reduce_mod(n: &ZPolynomial, m: &ZPolynomial) -> QPolynomial {
    if unit_lead(m) {
        let (_, r) = n.div_rem_exact_lead(m).expect("unit leading coefficient");
        to_rational(&r)
    } else {
        to_rational(n)
            .rem(&to_rational(m))
            .expect("nonzero modulus")
    }
}

/// Congruence `num / den ≡ 0 (mod m)` for a fraction not known to be in
/// lowest terms; common factors with the modulus are cancelled first.
pub fn congruent_unreduced(num: &ZPolynomial, den: &ZPolynomial, m: &ZPolynomial) -> Verdict {
    let mq = to_rational(m);
    let mut num = num.clone();
    let mut den = den.clone();
    loop {
        if num.is_zero() {
            return Verdict::pass();
        }
        if certainly_coprime(m, &den) {
            break;
        }
        let g = poly_gcd(&mq, &reduce_mod(&den, m));
        if g.is_constant() {
            break;
        }
        let h = poly_gcd(&g, &to_rational(&num).rem(&g).unwrap());
        if h.is_constant() {
            return Verdict::inapplicable(Witness::CommonFactor(g));
        }
        let (_, hz) = clear_denominators(&h);
        num = num.div_exact(&hz).expect("common factor divides numerator");
        den = den
            .div_exact(&hz)
            .expect("common factor divides denominator");
    }
    let r = reduce_mod(&num, m);
    if r.is_zero() {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::Residue(residue(&r, &to_rational(&den), 0, &mq)))
    }
}

/// Bivariate modulus `prod Phi_t(q)^e * prod (a - q^E)^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiModulus {
    q_part: BTreeMap<u64, u32>,
    a_roots: BTreeMap<i64, u32>,
}

impl BiModulus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cyclotomic(mut self, t: u64, e: u32) -> Self {
        assert!(t >= 1);
        *self.q_part.entry(t).or_insert(0) += e;
        self
    }

    pub fn with_factors(self, factors: &[(u64, u32)]) -> Self {
        factors
            .iter()
            .fold(self, |m, &(t, e)| m.with_cyclotomic(t, e))
    }

    /// Multiply by `(a - q^e)^k`.
    pub fn with_a_minus_q(mut self, e: i64, k: u32) -> Self {
        *self.a_roots.entry(e).or_insert(0) += k;
        self
    }

    /// Multiply by `(1 - a q^e)^k`, an associate of `(a - q^-e)^k`.
    pub fn with_one_minus_a_q(self, e: i64, k: u32) -> Self {
        self.with_a_minus_q(-e, k)
    }

    pub fn q_part(&self) -> &BTreeMap<u64, u32> {
        &self.q_part
    }

    pub fn a_roots(&self) -> &BTreeMap<i64, u32> {
        &self.a_roots
    }

    fn is_constant(&self) -> bool {
        self.q_part.iter().all(|(&t, &e)| t == 0 || e == 0)
            && self.a_roots.values().all(|&k| k == 0)
    }
}

impl fmt::Display for BiModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (t, e) in &self.q_part {
            parts.push(if *e == 1 {
                format!("Phi_{t}")
            } else {
                format!("Phi_{t}^{e}")
            });
        }
        for (r, k) in &self.a_roots {
            let base = format!("(a - q^{r})");
            parts.push(if *k == 1 { base } else { format!("{base}^{k}") });
        }
        f.write_str(&parts.join("*"))
    }
}

fn phi_valuation(x: &BiLaurent, t: u64, cap: usize) -> usize {
    let phi = cyclotomic_z(t);
    let mut v = cap;
    for c in x.base().coeffs() {
        if c.is_zero() {
            continue;
        }
        v = v.min(c.base().valuation(&phi, v).0);
        if v == 0 {
            break;
        }
    }
    v
}

fn root_valuation(x: &BiLaurent, e: i64, cap: usize) -> usize {
    let mut cur = x.clone();
    let mut v = 0;
    while v < cap {
        match div_a_minus_q(&cur, e) {
            Some(next) if !cur.is_zero() => {
                cur = next;
                v += 1;
            }
            _ => break,
        }
    }
    if cur.is_zero() {
        cap
    } else {
        v
    }
}

const UNBOUNDED: usize = usize::MAX;

/// Valuation test of `N / D` at every prime factor of the modulus; the flag
/// is set when the failure comes from the q-part.
fn bivariate_verdict(x: &BiFrac, m: &BiModulus) -> (Verdict, bool) {
    // (vn, vd, needed) per factor; any shared factor makes the test moot
    let q_vals: Vec<_> = m
        .q_part
        .iter()
        .map(|(&t, &e)| {
            let vd = phi_valuation(&x.den, t, UNBOUNDED);
            (t, phi_valuation(&x.num, t, vd + e as usize), vd, e as usize)
        })
        .collect();
    let root_vals: Vec<_> = m
        .a_roots
        .iter()
        .map(|(&r, &k)| {
            let vd = root_valuation(&x.den, r, UNBOUNDED);
            (
                r,
                root_valuation(&x.num, r, vd + k as usize),
                vd,
                k as usize,
            )
        })
        .collect();
    for &(t, vn, vd, _) in &q_vals {
        if vn < vd {
            let shared = to_rational(&cyclotomic_z(t)).pow((vd - vn) as u32);
            return (Verdict::inapplicable(Witness::CommonFactor(shared)), false);
        }
    }
    for &(r, vn, vd, _) in &root_vals {
        if vn < vd {
            let w = format!("denominator vanishes at a = q^{r}");
            return (Verdict::inapplicable(Witness::Note(w)), false);
        }
    }
    for &(t, vn, vd, e) in &q_vals {
        if vn - vd < e {
            let w = format!(
                "difference has Phi_{t}-adic valuation {}, need {e}",
                vn - vd
            );
            return (Verdict::fail(Witness::Note(w)), true);
        }
    }
    for &(r, vn, vd, k) in &root_vals {
        if vn - vd < k {
            let w = format!("difference has order {} at a = q^{r}, need {k}", vn - vd);
            return (Verdict::fail(Witness::Note(w)), false);
        }
    }
    (Verdict::pass(), false)
}

fn laurent_base(x: &ZLaurent) -> ZPolynomial {
    x.base().clone()
}

/// `c - q^|e|`; for negative `e` the caller reverses its polynomials, since
/// `c - q^e = -q^e (1 - c q^|e|)` and `q -> 1/q` turns that into this form.
fn specialized_root(c: &BigInt, e: i64) -> ZPolynomial {
    let k = e.unsigned_abs() as usize;
    Poly::monomial(BigInt::from(-1), k).add(&Poly::constant(c.clone()))
}

fn reversed(p: &ZPolynomial) -> ZPolynomial {
    let mut cs = p.coeffs().to_vec();
    cs.reverse();
    Poly::from_coeffs(cs)
}

/// Univariate verdicts at `a = c`, factor by factor: the q-part and each
/// root of the modulus.
fn specialized_verdicts(x: &BiFrac, m: &BiModulus, c: &BigInt) -> Option<(Verdict, Verdict)> {
    let d = laurent_base(&specialize_a_int(&x.den, c));
    if d.is_zero() {
        return None;
    }
    let n = laurent_base(&specialize_a_int(&x.num, c));
    let mq: Vec<(u64, u32)> = m.q_part.iter().map(|(&t, &e)| (t, e)).collect();
    let q_verdict = if mq.is_empty() {
        Verdict::pass()
    } else {
        let (_, mz) = clear_denominators(&cyclotomic_product(&mq));
        congruent_unreduced(&n, &d, &mz)
    };
    let mut root_verdicts = Vec::new();
    let (n_rev, d_rev) = (reversed(&n), reversed(&d));
    for (&r, &k) in &m.a_roots {
        if r == 0 {
            // c - 1 is a unit
            continue;
        }
        let f = specialized_root(c, r).pow(k);
        root_verdicts.push(if r > 0 {
            congruent_unreduced(&n, &d, &f)
        } else {
            congruent_unreduced(&n_rev, &d_rev, &f)
        });
    }
    Some((q_verdict, Verdict::all(root_verdicts)))
}

/// Evaluation points `2, -2, 3, -3, ...`.
fn sample_points(count: usize) -> impl Iterator<Item = BigInt> {
    (0..)
        .map(|i: i64| BigInt::from(if i % 2 == 0 { 2 + i / 2 } else { -(2 + i / 2) }))
        .take(count)
}

/// Bivariate congruence of an unreduced fraction, with the specialization
/// cross-check.
pub fn a_congruent_frac(x: &BiFrac, m: &BiModulus) -> Result<Verdict> {
    if m.is_constant() {
        return Err(Error::InvalidModulus("constant bivariate modulus".into()));
    }
    if x.den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if x.num.is_zero() {
        return Ok(Verdict::pass());
    }
    let (verdict, q_failed) = bivariate_verdict(x, m);
    let need = x.num.base().len();
    let mut seen = 0;
    let mut q_nonpass = false;
    // a few spare points in case a specialization hits a pole
    for c in sample_points(need + 8) {
        if seen == need {
            break;
        }
        let Some((vq, vr)) = specialized_verdicts(x, m, &c) else {
            continue;
        };
        seen += 1;
        if verdict.is_pass() && (vq.status == Status::Fail || vr.status == Status::Fail) {
            return Ok(Verdict::fail(Witness::Note(format!(
                "bivariate pass contradicted at a = {c}: {}",
                if vq.is_pass() { vr.witness } else { vq.witness }.unwrap()
            ))));
        }
        q_nonpass |= !vq.is_pass();
    }
    if seen == need && q_failed && !q_nonpass {
        return Ok(Verdict::fail(Witness::Note(
            "bivariate q-part failure not seen in any specialization".into(),
        )));
    }
    // root failures need not be visible at finitely many points
    Ok(verdict)
}

/// `x ≡ y (mod m)` in the bivariate setting.
pub fn a_congruent(x: &ABiRational, y: &ABiRational, m: &BiModulus) -> Result<Verdict> {
    a_congruent_frac(&x.sub(y).to_bifrac(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivariate::{a_minus_q, one_minus_a_q, one_minus_q_over_a};
    use crate::product::{sum_terms, QProduct};
    use crate::q_objects::{cyclotomic, q_int};
    use crate::QLaurent;

    fn qp(cs: &[i64]) -> QPolynomial {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    fn lr(x: QLaurent) -> QRational {
        QRational::from_laurent(&x)
    }

    #[test]
    fn univariate_examples() {
        let phi3 = cyclotomic(3);
        let v = congruent(&lr(q_int(5)), &QRational::zero(), &cyclotomic(5)).unwrap();
        assert_eq!(v.status, Status::Pass);

        let x = QRational::new(qp(&[1]), qp(&[-1, 1]), 0).unwrap();
        let y = QRational::constant(rat(-1, 2));
        assert!(congruent(&x, &y, &qp(&[1, 1])).unwrap().is_pass());

        let v = congruent(
            &lr(QLaurent::from_poly(qp(&[0, 1]))),
            &QRational::one(),
            &phi3,
        )
        .unwrap();
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.witness, Some(Witness::Residue(qp(&[-1, 1]))));

        let inv = QRational::from_poly(&phi3).inv().unwrap();
        let v = congruent(&inv, &QRational::zero(), &phi3).unwrap();
        assert_eq!(v.status, Status::Inapplicable);
        assert_eq!(v.witness, Some(Witness::CommonFactor(phi3.clone())));

        assert!(matches!(
            congruent(&x, &y, &qp(&[3])),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn negative_shift_is_a_unit() {
        // q^-1 - q^2 = q^-1 (1 - q^3), divisible by Phi_3
        let x = lr(QLaurent::monomial(rat(1, 1), -1));
        let y = lr(QLaurent::monomial(rat(1, 1), 2));
        assert!(congruent(&x, &y, &cyclotomic(3)).unwrap().is_pass());
    }

    #[test]
    fn denominator_examples() {
        // (q;q^2)_1 (q^5;q^2)_1 / (q^2;q^2)_1^2
        let x = QProduct::one()
            .times_binomial(1, 1)
            .times_binomial(5, 1)
            .times_binomial(2, -2)
            .to_qrational()
            .unwrap();
        assert_eq!(x.den(), &qp(&[1, 1]).pow(2));
        assert!(denom_coprime(&x, &qp(&[1, 0, 0, -1])).is_pass());

        let x = QProduct::one()
            .times_binomial(3, 1)
            .times_binomial(2, -1)
            .to_qrational()
            .unwrap();
        assert_eq!(x.den(), &qp(&[1, 1]));
        assert!(denom_coprime(&x, &qp(&[1, 0, 0, -1])).is_pass());

        // [3] / (q^-2;q^2)_1
        let x = QProduct::one()
            .times_q_int(3, 1)
            .times_binomial(-2, -1)
            .to_qrational()
            .unwrap();
        let full = crate::q_objects::modulus(3, 3);
        assert!(denom_coprime(&x, &full).is_pass());
        let v = denom_coprime(&x, &qp(&[1, 0, 0, -1]));
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.witness, Some(Witness::CommonFactor(qp(&[-1, 1]))));
    }

    #[test]
    fn factored_path_agrees_with_general() {
        // 1/(1-q^3) - 1/(1-q) = -(q+q^2)/((1-q)(1-q^3))
        let terms = [
            QProduct::one().times_binomial(3, -1),
            QProduct::one().times_binomial(1, -1).scale(&rat(-1, 1)),
        ];
        let f = sum_terms(&terms).unwrap();
        for factors in [vec![(3u64, 1u32)], vec![(2, 1)], vec![(3, 2), (2, 1)]] {
            let m = cyclotomic_product(&factors);
            let general = congruent(&f.to_qrational(), &QRational::zero(), &m).unwrap();
            assert_eq!(congruent_fraction(&f, &factors), general, "{factors:?}");
        }
        // q(1+q) / (1-q^3)... times (1-q^2)^2 is divisible by Phi_2^2
        let g = sum_terms(&[QProduct::one().times_binomial(2, 2).times_binomial(3, -1)]).unwrap();
        assert!(congruent_fraction(&g, &[(2, 2)]).is_pass());
        assert_eq!(congruent_fraction(&g, &[(2, 3)]).status, Status::Fail);
        assert_eq!(
            congruent_fraction(&g, &[(3, 1)]).status,
            Status::Inapplicable
        );
    }

    #[test]
    fn unreduced_cancels_shared_factors() {
        let z = |cs: &[i64]| ZPolynomial::from_i64s(cs);
        // (1-q^3)/(1-q^3) = 1, not divisible by Phi_3
        let v = congruent_unreduced(&z(&[1, 0, 0, -1]), &z(&[1, 0, 0, -1]), &z(&[1, 1, 1]));
        assert_eq!(v.status, Status::Fail);
        // (1-q^3)^2/(1-q^3) is
        let n = z(&[1, 0, 0, -1]).pow(2);
        assert!(congruent_unreduced(&n, &z(&[1, 0, 0, -1]), &z(&[1, 1, 1])).is_pass());
        // 1/(1-q^3)
        let v = congruent_unreduced(&z(&[1]), &z(&[1, 0, 0, -1]), &z(&[1, 1, 1]));
        assert_eq!(v.status, Status::Inapplicable);
    }

    fn bf(num: BiLaurent) -> BiFrac {
        BiFrac {
            num,
            den: BiLaurent::one(),
        }
    }

    #[test]
    fn bivariate_reflexive() {
        let x = ABiRational::from_bilaurent(&one_minus_a_q(2), &a_minus_q(1)).unwrap();
        let m = BiModulus::new().with_cyclotomic(3, 2).with_a_minus_q(3, 1);
        assert!(a_congruent(&x, &x, &m).unwrap().is_pass());
        assert!(matches!(
            a_congruent(&x, &x, &BiModulus::new()),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn bivariate_phi_square_fails() {
        // (1 - a q^3)(1 - q^3 / a) is not divisible by Phi_3 at all
        let x = bf(one_minus_a_q(3).mul(&one_minus_q_over_a(3)));
        let m = BiModulus::new().with_cyclotomic(3, 2);
        let v = a_congruent_frac(&x, &m).unwrap();
        assert_eq!(v.status, Status::Fail);
        // (1 - q^3) (a - q) is divisible by Phi_3 once
        let y = bf(BiLaurent::constant(ZLaurent::one_minus_x_pow(3)).mul(&a_minus_q(1)));
        assert!(
            a_congruent_frac(&y, &BiModulus::new().with_cyclotomic(3, 1))
                .unwrap()
                .is_pass()
        );
        assert_eq!(a_congruent_frac(&y, &m).unwrap().status, Status::Fail);
    }

    #[test]
    fn bivariate_roots() {
        let x = bf(a_minus_q(3).mul(&one_minus_a_q(3)));
        let m = BiModulus::new()
            .with_a_minus_q(3, 1)
            .with_one_minus_a_q(3, 1);
        assert!(a_congruent_frac(&x, &m).unwrap().is_pass());
        let m2 = BiModulus::new().with_a_minus_q(3, 2);
        assert_eq!(a_congruent_frac(&x, &m2).unwrap().status, Status::Fail);
        let y = BiFrac {
            num: BiLaurent::one(),
            den: a_minus_q(3),
        };
        assert_eq!(
            a_congruent_frac(&y, &m).unwrap().status,
            Status::Inapplicable
        );
    }
}
