//! Strategies and property bodies shared by the property and acceptance
//! suites.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use qcert_core::congruence::{congruent, cyclotomic_product, Status};
use qcert_core::gcd::poly_gcd;
use qcert_core::product::divisors;
use qcert_core::q_objects::cyclotomic;
use qcert_core::ratfun::QRational;
use qcert_core::scalar::rat;
use qcert_core::{BigRat, QPolynomial};

pub const CASES: u32 = 1000;

pub type Check = Result<(), TestCaseError>;

pub fn small_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn poly(max_len: usize) -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(QPolynomial::from_coeffs)
}

pub fn nonzero_poly(max_len: usize) -> impl Strategy<Value = QPolynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfun() -> impl Strategy<Value = QRational> {
    (poly(4), nonzero_poly(3), -3i64..=3).prop_map(|(n, d, s)| QRational::new(n, d, s).unwrap())
}

/// Denominators with no roots on the unit circle.
pub fn unit_den() -> impl Strategy<Value = QPolynomial> {
    prop::sample::select(vec![
        QPolynomial::from_i64s(&[1]),
        QPolynomial::from_i64s(&[2, 1]),
        QPolynomial::from_i64s(&[3, 1, 2]),
        QPolynomial::from_i64s(&[1, -3]),
    ])
}

pub fn modulus() -> impl Strategy<Value = QPolynomial> {
    prop::collection::btree_map(1u64..=12, 1u32..=2, 1..=3).prop_map(|m| {
        let f: Vec<(u64, u32)> = m.into_iter().collect();
        cyclotomic_product(&f)
    })
}

fn status(x: &QRational, y: &QRational, m: &QPolynomial) -> Status {
    congruent(x, y, m).unwrap().status
}

pub fn field_axioms(a: &QRational, b: &QRational, c: &QRational) -> Check {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert!(a.add(&a.neg()).is_zero());
    prop_assert_eq!(&a.mul(&QRational::one()), a);
    if !a.is_zero() {
        prop_assert_eq!(a.mul(&a.inv().unwrap()), QRational::one());
    }
    Ok(())
}

pub fn gcd_divides_both(f: &QPolynomial, g: &QPolynomial, h: &QPolynomial) -> Check {
    let (f, g) = (f.mul(h), g.mul(h));
    let d = poly_gcd(&f, &g);
    prop_assert!(f.rem(&d).unwrap().is_zero());
    prop_assert!(g.rem(&d).unwrap().is_zero());
    prop_assert!(d.rem(h).unwrap().is_zero());
    Ok(())
}

pub type EquivInput = (
    QRational,
    QRational,
    QPolynomial,
    QPolynomial,
    QPolynomial,
    QPolynomial,
);

pub fn equiv_input() -> impl Strategy<Value = EquivInput> {
    (ratfun(), ratfun(), poly(4), poly(4), modulus(), unit_den())
}

pub fn congruence_equivalence((x, w, a, b, m, den): &EquivInput) -> Check {
    // y, z differ from x by multiples of m with unit denominators
    let step = |p: &QPolynomial| QRational::new(m.mul(p), den.clone(), 0).unwrap();
    let y = x.add(&step(a));
    let z = y.add(&step(b));
    let sx = status(x, x, m);
    prop_assert_ne!(sx, Status::Fail);
    let base = [status(x, &y, m), status(&y, &z, m), status(x, &z, m)];
    if sx == Status::Pass {
        prop_assert_eq!(base, [Status::Pass; 3]);
        prop_assert_eq!(status(x, w, m), status(&z, w, m));
    }
    prop_assert_eq!(status(x, w, m), status(w, x, m));
    Ok(())
}

pub fn unit_shift(x: &QRational, y: &QRational, m: &QPolynomial, s: i64) -> Check {
    let one = QPolynomial::from_i64s(&[1]);
    let q = QRational::new(one.clone(), one, s).unwrap();
    prop_assert_eq!(status(x, y, m), status(&x.mul(&q), &y.mul(&q), m));
    Ok(())
}

pub fn cyclotomic_reconstruction(n: u64) -> Check {
    let mut acc = QPolynomial::from_i64s(&[1]);
    for t in divisors(n) {
        acc = acc.mul(&cyclotomic(t));
    }
    let target = QPolynomial::monomial(rat(1, 1), n as usize).sub(&QPolynomial::from_i64s(&[1]));
    prop_assert_eq!(acc, target);
    Ok(())
}
