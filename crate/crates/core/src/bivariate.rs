//! Rational functions in an indeterminate `a` over q-polynomials.
//!
//! [`ABiRational`] is the reduced public carrier. The verifiers work with
//! [`BiFrac`], an unreduced quotient of Laurent polynomials in `a` whose
//! coefficients are integer Laurent polynomials in `q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gcd::{to_rational, GcdDomain};
use crate::poly::Poly;
use crate::q_objects::ASign;
use crate::scalar::{int_to_rat, Field, Ring};
use crate::{BiLaurent, BigRat, QPolynomial, ZLaurent, ZPolynomial};

/// Polynomial in `a` with integer q-polynomial coefficients.
pub type ZBiPoly = Poly<ZPolynomial>;
/// Polynomial in `a` with rational q-polynomial coefficients.
pub type QBiPoly = Poly<QPolynomial>;

/// `num / den` in `Q[q][a]`, reduced: the gcd is a unit, and the leading
/// q-coefficient of the leading a-coefficient of `den` is one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ABiRational {
    num: QBiPoly,
    den: QBiPoly,
}

fn to_int_bipoly(p: &QBiPoly) -> (BigRat, ZBiPoly) {
    let l = p
        .coeffs()
        .iter()
        .flat_map(|c| c.coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lr = int_to_rat(&l);
    let ints = p.map(|c| c.map(|x| (x * &lr).to_integer()));
    (BigRat::new(BigInt::one(), l), ints)
}

fn to_rat_bipoly(p: &ZBiPoly) -> QBiPoly {
    p.map(to_rational)
}

/// Reduce `num / den` over `Q[q][a]`.
pub fn abirat_reduce(num: &QBiPoly, den: &QBiPoly) -> Result<ABiRational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(ABiRational::zero());
    }
    let (sn, zn) = to_int_bipoly(num);
    let (sd, zd) = to_int_bipoly(den);
    let g = zn.gcd(&zd);
    let zn = zn.div_exact(&g).expect("gcd divides numerator");
    let zd = zd.div_exact(&g).expect("gcd divides denominator");
    let lead = zd.leading().unwrap().leading().unwrap().clone();
    let s = sn / sd / int_to_rat(&lead);
    Ok(ABiRational {
        num: to_rat_bipoly(&zn).map(|c| c.scale(&s)),
        den: to_rat_bipoly(&zd).map(|c| c.scale(&int_to_rat(&lead).recip())),
    })
}

impl ABiRational {
    pub fn zero() -> Self {
        ABiRational {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        ABiRational {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &QBiPoly {
        &self.num
    }

    pub fn den(&self) -> &QBiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Reduced value of `num / den` given as Laurent polynomials in both
    /// variables.
    pub fn from_bilaurent(num: &BiLaurent, den: &BiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (n, ns) = clear_bilaurent(num);
        let (d, ds) = clear_bilaurent(den);
        // a^(na) q^(nq) n / (a^(da) q^(dq) d)
        let (da, dq) = (ns.0 - ds.0, ns.1 - ds.1);
        let lift = |p: ZBiPoly, ea: i64, eq: i64| {
            p.shift_up(ea.max(0) as usize)
                .map(|c| c.shift_up(eq.max(0) as usize))
        };
        let n2 = lift(n, da, dq);
        let d2 = lift(d, -da, -dq);
        abirat_reduce(&to_rat_bipoly(&n2), &to_rat_bipoly(&d2))
    }

    /// `(a q^e; q^d)_k` or `(q^e / a; q^d)_k`.
    pub fn poch(e: i64, sign: ASign, d: i64, k: u64) -> Self {
        let mut num = BiLaurent::one();
        for j in 0..k as i64 {
            let f = match sign {
                ASign::A => one_minus_a_q(e + j * d),
                ASign::AInverse => one_minus_q_over_a(e + j * d),
            };
            num = num.mul(&f);
        }
        Self::from_bilaurent(&num, &BiLaurent::one()).expect("nonzero denominator")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        abirat_reduce(&n, &self.den.mul(&other.den)).unwrap()
    }

    pub fn neg(&self) -> Self {
        ABiRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        abirat_reduce(&self.num.mul(&other.num), &self.den.mul(&other.den)).unwrap()
    }

    /// Unreduced integer form, for congruence testing.
    pub fn to_bifrac(&self) -> BiFrac {
        let (_, n) = to_int_bipoly(&self.num);
        let (_, d) = to_int_bipoly(&self.den);
        BiFrac {
            num: zbipoly_to_bilaurent(&n),
            den: zbipoly_to_bilaurent(&d),
        }
    }

    /// Substitute `a = c`.
    pub fn eval_a(&self, c: &BigRat) -> Result<(QPolynomial, QPolynomial)> {
        let ev = |p: &QBiPoly| {
            let mut acc = QPolynomial::zero();
            for coeff in p.coeffs().iter().rev() {
                acc = acc.scale(c).add(coeff);
            }
            acc
        };
        let d = ev(&self.den);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok((ev(&self.num), d))
    }
}

/// Splits off the lowest powers of `a` and `q`, leaving integer polynomials.
fn clear_bilaurent(x: &BiLaurent) -> (ZBiPoly, (i64, i64)) {
    let qmin = x
        .base()
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.shift())
        .min()
        .unwrap_or(0);
    let p = x.base().map(|c| {
        if c.is_zero() {
            ZPolynomial::zero()
        } else {
            c.base().shift_up((c.shift() - qmin) as usize)
        }
    });
    (p, (x.shift(), qmin))
}

fn zbipoly_to_bilaurent(p: &ZBiPoly) -> BiLaurent {
    BiLaurent::from_poly(p.map(|c| ZLaurent::from_poly(c.clone())))
}

fn qmono(c: i64, e: i64) -> ZLaurent {
    ZLaurent::monomial(BigInt::from(c), e)
}

/// `1 - a q^e`
pub fn one_minus_a_q(e: i64) -> BiLaurent {
    BiLaurent::from_poly(Poly::from_coeffs(vec![ZLaurent::one(), qmono(-1, e)]))
}

/// `a - q^e`
pub fn a_minus_q(e: i64) -> BiLaurent {
    BiLaurent::from_poly(Poly::from_coeffs(vec![qmono(-1, e), ZLaurent::one()]))
}

/// `1 - q^e / a = a^-1 (a - q^e)`
pub fn one_minus_q_over_a(e: i64) -> BiLaurent {
    a_minus_q(e).mul_monomial(-1)
}

/// Constant in `a`.
pub fn q_only(x: ZLaurent) -> BiLaurent {
    BiLaurent::constant(x)
}

/// `num / den`, not reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiFrac {
    pub num: BiLaurent,
    pub den: BiLaurent,
}

impl BiFrac {
    pub fn zero() -> Self {
        BiFrac {
            num: BiLaurent::zero(),
            den: BiLaurent::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.den == self.den {
            return BiFrac {
                num: self.num.sub(&other.num),
                den: self.den.clone(),
            };
        }
        BiFrac {
            num: self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BiFrac {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn to_abirational(&self) -> Result<ABiRational> {
        ABiRational::from_bilaurent(&self.num, &self.den)
    }
}

/// `sum_{k=lo}^{hi} c_k prod_{j=1}^{k} num_j / den_j` by Horner's scheme,
/// with denominator `prod_{j=1}^{hi} den_j` (times `extra_den`). The closures
/// give `c_k`, `num_j` and `den_j`.
pub fn horner_sum(
    lo: i64,
    hi: i64,
    c: impl Fn(i64) -> BiLaurent,
    num: impl Fn(i64) -> BiLaurent,
    den: impl Fn(i64) -> BiLaurent,
) -> BiFrac {
    if lo > hi {
        return BiFrac::zero();
    }
    let mut acc = c(hi);
    let mut dsuf = BiLaurent::one();
    for k in (lo..hi).rev() {
        dsuf = dsuf.mul(&den(k + 1));
        acc = c(k).mul(&dsuf).add(&num(k + 1).mul(&acc));
    }
    let mut pre_n = BiLaurent::one();
    let mut pre_d = BiLaurent::one();
    for j in 1..=lo {
        pre_n = pre_n.mul(&num(j));
        pre_d = pre_d.mul(&den(j));
    }
    BiFrac {
        num: pre_n.mul(&acc),
        den: pre_d.mul(&dsuf),
    }
}

/// Substitute `a = c` into a bivariate Laurent polynomial, giving a Laurent
/// polynomial in `q` with rational coefficients.
pub fn specialize_a(x: &BiLaurent, c: &BigRat) -> crate::QLaurent {
    let mut acc = crate::QLaurent::zero();
    for coeff in x.base().coeffs().iter().rev() {
        acc = acc.scale(c);
        acc = acc.add(&coeff_to_q(coeff));
    }
    let s = x.shift();
    let cs = if s >= 0 {
        Ring::pow(c, s as u32)
    } else {
        Ring::pow(
            &c.inv().expect("nonzero specialization"),
            s.unsigned_abs() as u32,
        )
    };
    acc.scale(&cs)
}

/// Substitute an integer `a = c`, dropping the unit `c^shift`.
pub fn specialize_a_int(x: &BiLaurent, c: &BigInt) -> ZLaurent {
    let mut acc = ZLaurent::zero();
    for coeff in x.base().coeffs().iter().rev() {
        acc = acc.scale(c).add(coeff);
    }
    acc
}

fn coeff_to_q(x: &ZLaurent) -> crate::QLaurent {
    crate::QLaurent::new(to_rational(x.base()), x.shift())
}

/// Substitute `a = q^e`.
pub fn substitute_a_power(x: &BiLaurent, e: i64) -> ZLaurent {
    let mut acc = ZLaurent::zero();
    for (i, coeff) in x.base().coeffs().iter().enumerate() {
        if !coeff.is_zero() {
            acc = acc.add(&coeff.mul_monomial(e * (i as i64 + x.shift())));
        }
    }
    acc
}

/// Exact division by `a - q^e`, or `None` when it does not divide.
pub fn div_a_minus_q(x: &BiLaurent, e: i64) -> Option<BiLaurent> {
    let b = x.base().coeffs();
    if b.is_empty() {
        return Some(BiLaurent::zero());
    }
    // synthetic division of the a-polynomial part; a^shift is a unit
    let deg = b.len() - 1;
    let mut h = vec![ZLaurent::zero(); deg];
    let mut carry = ZLaurent::zero();
    for i in (1..=deg).rev() {
        carry = b[i].add(&carry.mul_monomial(e));
        h[i - 1] = carry.clone();
    }
    let rem = b[0].add(&carry.mul_monomial(e));
    if !rem.is_zero() {
        return None;
    }
    Some(BiLaurent::new(Poly::from_coeffs(h), x.shift()))
}

impl fmt::Display for ABiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &QBiPoly| {
            let mut parts = Vec::new();
            for (i, c) in p.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let a = match i {
                    0 => String::new(),
                    1 => "*a".to_string(),
                    _ => format!("*a^{i}"),
                };
                parts.push(format!("({c}){a}"));
            }
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        write!(f, "[{}] / [{}]", show(&self.num), show(&self.den))
    }
}
