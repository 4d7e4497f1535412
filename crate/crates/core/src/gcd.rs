//! Gcd over unique factorisation domains: the integers and, recursively,
//! polynomials over them (primitive pseudo-remainder sequences).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::poly::Poly;
use crate::scalar::{int_to_rat, Ring};
use crate::{BigRat, QPolynomial, ZPolynomial};

pub trait GcdDomain: Ring {
    /// Gcd normalised by [`GcdDomain::normalize`]; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;

    /// True when the canonical associate is `-self`.
    fn is_negative_unit_normal(&self) -> bool;

    fn normalize(&self) -> Self {
        if self.is_negative_unit_normal() {
            self.neg_ref()
        } else {
            self.clone()
        }
    }
}

impl GcdDomain for BigInt {
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn is_negative_unit_normal(&self) -> bool {
        self.is_negative()
    }
}

impl<T: GcdDomain> GcdDomain for Poly<T> {
    fn gcd(&self, other: &Self) -> Self {
        prs_gcd(self, other)
    }

    fn is_negative_unit_normal(&self) -> bool {
        self.leading().is_some_and(|c| c.is_negative_unit_normal())
    }
}

impl<T: GcdDomain> Poly<T> {
    pub fn content(&self) -> T {
        let mut c = T::zero();
        for x in self.coeffs() {
            c = c.gcd(x);
            if c.is_one() {
                break;
            }
        }
        c
    }

    /// Primitive part with a canonical leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let p = self.div_exact_scalar(&c);
        p.normalize()
    }

    fn div_exact_scalar(&self, c: &T) -> Self {
        Poly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|x| x.try_div(c).expect("content divides every coefficient"))
                .collect(),
        )
    }
}

impl<T: Ring> Poly<T> {
    /// Returns `(r, k)` with `lc(b)^k * self = quot * b + r` and
    /// `deg r < deg b`, computed without division.
    pub fn pseudo_rem(&self, b: &Self) -> (Self, u32) {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut k = 0;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(&lb).sub(&Poly::monomial(lr, dr - db).mul(b));
            k += 1;
        }
        (r, k)
    }
}

fn prs_gcd<T: GcdDomain>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    if a.is_zero() {
        return b.primitive_part().scale(&b.content().normalize());
    }
    if b.is_zero() {
        return a.primitive_part().scale(&a.content().normalize());
    }
    let c = a.content().gcd(&b.content());
    let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let (r, _) = x.pseudo_rem(&y);
        if r.is_zero() {
            break;
        }
        if r.degree() == Some(0) {
            y = Poly::one();
            break;
        }
        x = y;
        y = r.primitive_part();
    }
    y.scale(&c).normalize()
}

/// Splits a rational polynomial as `scale * z` with `z` primitive over the
/// integers and positive leading coefficient.
pub fn clear_denominators(p: &QPolynomial) -> (BigRat, ZPolynomial) {
    if p.is_zero() {
        return (BigRat::from_integer(0.into()), Poly::zero());
    }
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: ZPolynomial = p.map(|c| (c * int_to_rat(&l)).to_integer());
    let content = ints.content();
    let mut z = ints.div_exact_scalar(&content);
    let mut scale = BigRat::new(content, l);
    if z.is_negative_unit_normal() {
        z = z.neg();
        scale = -scale;
    }
    (scale, z)
}

pub fn to_rational(z: &ZPolynomial) -> QPolynomial {
    z.map(int_to_rat)
}

/// Monic gcd over the rationals, via a primitive remainder sequence on the
/// integer primitive parts.
pub fn poly_gcd(f: &QPolynomial, g: &QPolynomial) -> QPolynomial {
    let (_, zf) = clear_denominators(f);
    let (_, zg) = clear_denominators(g);
    to_rational(&zf.gcd(&zg)).monic()
}

const P61: u64 = (1 << 61) - 1;

fn mul_p(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P61 as u128) as u64
}

fn pow_p(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_p(acc, a);
        }
        a = mul_p(a, a);
        e >>= 1;
    }
    acc
}

fn reduce_p(z: &ZPolynomial) -> Vec<u64> {
    let p = BigInt::from(P61);
    let mut v: Vec<u64> = z
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p);
            r.try_into().expect("residue fits")
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` by `b` over `Z/p`, in place.
fn rem_p(a: &mut Vec<u64>, b: &[u64]) {
    let inv = pow_p(*b.last().unwrap(), P61 - 2);
    while a.len() >= b.len() {
        let f = mul_p(*a.last().unwrap(), inv);
        let off = a.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            a[off + i] = (a[off + i] + P61 - mul_p(f, bc)) % P61;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// True when `a` and `b` are certainly coprime over the rationals: their
/// images modulo a large prime are coprime and the prime does not divide
/// the leading coefficient of `a`. A `false` answer is inconclusive.
pub fn certainly_coprime(a: &ZPolynomial, b: &ZPolynomial) -> bool {
    let mut x = reduce_p(a);
    if x.len() != a.len() {
        return false;
    }
    let mut y = reduce_p(b);
    while !y.is_empty() {
        rem_p(&mut x, &y);
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}
