//! Acceptance run: one line per criterion. Runs without the libtest
//! harness so the lines are printed on every run; exits nonzero on failure.

mod common;

use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qcert_core::claims::{self, ClaimId};
use qcert_core::congruence::Witness;
use qcert_core::padic::{self, VanHamme};
use qcert_core::q_objects::{ClaimParams, MVariant};
use qcert_core::scalar::rat;
use qcert_core::sweep::{self, Claim, RecordStatus, SweepConfig};
use qcert_core::BigInt;

const BOTH: [MVariant; 2] = [MVariant::AtM, MVariant::AtNMinus1];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn within(t: Duration, limit_s: u64) -> bool {
    t < Duration::from_secs(limit_s)
}

/// `(n, d, r)` with `2 <= n <= 12`, `1 <= d <= 4`, `-3 <= r <= 5` and both
/// gcd conditions.
fn grid() -> Vec<(u64, u64, i64)> {
    let mut out = Vec::new();
    for n in 2..=12u64 {
        for d in 1..=4u64 {
            for r in -3..=5i64 {
                if ClaimParams::new(n, d, r, MVariant::AtM).is_ok() {
                    out.push((n, d, r));
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let cases: Vec<_> = grid()
        .into_iter()
        .flat_map(|c| BOTH.map(move |v| (c, v)))
        .collect();
    let start = Instant::now();
    let mut bad = Vec::new();
    for &((n, d, r), v) in &cases {
        match claims::verify_mainth(n, d, r, v) {
            Ok(x) if x.is_pass() => {}
            other => bad.push(format!("({n},{d},{r},{}): {other:?}", v.label())),
        }
    }
    let serial = start.elapsed();
    let cfg = SweepConfig {
        claims: vec![Claim::Q(ClaimId::MainTh)],
        n_range: (2, 12),
        d_range: (1, 4),
        r_range: (-3, 5),
        jobs: 4,
        ..SweepConfig::default()
    };
    let start = Instant::now();
    let report = sweep::run(&cfg).unwrap();
    let pooled = start.elapsed();
    let ok = bad.is_empty()
        && report.counts.pass == cases.len()
        && within(serial, 600)
        && within(pooled, 180);
    outcome(
        ok,
        format!(
            "{} cases, {} failing; {serial:.2?} single-threaded, {pooled:.2?} on 4 workers{}",
            cases.len(),
            bad.len(),
            bad.first()
                .map(|b| format!("; first {b}"))
                .unwrap_or_default()
        ),
    )
}

fn criterion_2() -> Outcome {
    let auxiliary = [
        ClaimId::Sym3,
        ClaimId::ModPhi2,
        ClaimId::LiangduanA,
        ClaimId::Truncon,
        ClaimId::Denoms,
        ClaimId::Fmm,
        ClaimId::Gm1k,
        ClaimId::JacksonTrunc,
        ClaimId::Telescoping,
    ];
    let cfg = SweepConfig {
        claims: auxiliary.into_iter().map(Claim::Q).collect(),
        n_range: (2, 12),
        d_range: (1, 4),
        r_range: (-3, 5),
        jobs: 4,
        ..SweepConfig::default()
    };
    let start = Instant::now();
    let report = sweep::run(&cfg).unwrap();
    let elapsed = start.elapsed();
    // an empty quantifier range is reported, not counted as a failure
    let is_empty_range =
        |w: &Option<String>| w.as_deref().is_some_and(|w| w.starts_with("empty range"));
    let bad: Vec<_> = report
        .records
        .iter()
        .filter(|r| {
            !(r.status == RecordStatus::Pass
                || r.status == RecordStatus::Inapplicable && is_empty_range(&r.witness))
        })
        .collect();
    let expected = auxiliary.len() * grid().len();
    let strict = claims::verify_denoms(3, 2, 1, true).unwrap();
    let strict_ok = matches!(
        strict.witness.as_ref().map(Witness::leaf),
        Some(Witness::CommonFactor(p)) if p.to_string() == "q - 1"
    ) && strict
        .witness
        .as_ref()
        .is_some_and(|w| w.to_string().contains("k = 1"));
    let ok = bad.is_empty() && report.records.len() == expected && strict_ok;
    outcome(
        ok,
        format!(
            "{} records ({} pass, {} empty-range), {} bad; strict (3,2,1,k=1) witness [{}]; {elapsed:.2?}",
            report.records.len(),
            report.counts.pass,
            report.counts.inapplicable,
            bad.len(),
            strict.witness.map(|w| w.to_string()).unwrap_or_default()
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let a = (1..=40).all(|n| claims::verify_identity(n).unwrap().is_pass());
    let b = (1..=39).all(|n| claims::verify_identity_rec(n).unwrap().is_pass());
    let t = start.elapsed();
    outcome(
        a && b && within(t, 60),
        format!("identity n <= 40: {a}, recurrence n <= 39: {b}; {t:.2?}"),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    for (d, r) in [(1u64, 1i64), (2, 1), (2, -1), (3, 2)] {
        ok &= claims::verify_wz_relation(d, r, 10, 10).unwrap().is_pass();
    }
    let t = start.elapsed();
    outcome(
        ok && within(t, 120),
        format!("4 parameter pairs on [0,10]x[1,10]; {t:.2?}"),
    )
}

fn criterion_5() -> Outcome {
    let runs = [
        (VanHamme::B2, vec![5u64, 7, 11, 13]),
        (VanHamme::E2, vec![7, 13]),
        (VanHamme::F2, vec![5, 13]),
    ];
    let mut ok = true;
    for (v, ps) in &runs {
        for &p in ps {
            ok &= padic::verify_vanhamme(p, *v).unwrap().is_pass();
        }
    }
    let lhs = padic::vanhamme_lhs(5, VanHamme::B2);
    let res = padic::mod_pow(&lhs, 5, 3).unwrap();
    let inst = lhs == rat(435, 512) && res == BigInt::from(5);
    outcome(
        ok && inst,
        format!("8 instances; p = 5: {lhs} = {res} mod 125"),
    )
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    let mut check = |label: String, v: qcert_core::Result<qcert_core::congruence::Verdict>| {
        count += 1;
        if !v.as_ref().is_ok_and(|v| v.is_pass()) {
            bad.push(label);
        }
    };
    for p in [5u64, 7, 11, 13] {
        for v in BOTH {
            check(format!("sun {p}"), padic::verify_sun(p, v));
        }
    }
    for p in [5u64, 7, 11] {
        for a in ["1", "1/2", "1/3", "2/3", "3/4"] {
            for v in BOTH {
                check(
                    format!("alpha {p} {a}"),
                    padic::verify_alpha(p, &a.parse().unwrap(), v),
                );
            }
        }
    }
    for p in [5u64, 7] {
        for s in [1u32, 2] {
            for (d, r) in [(2u64, 1i64), (3, 1), (3, 2), (4, 3)] {
                for v in BOTH {
                    check(
                        format!("prime_power {p} {s} {d} {r}"),
                        padic::verify_prime_power(p, s, d, r, v),
                    );
                }
            }
        }
    }
    let sun5 = padic::mod_pow(&padic::sun_lhs(5, MVariant::AtM), 5, 4).unwrap();
    let inst = sun5 == BigInt::from(505)
        && padic::sun_rhs(5) == rat(-120, 1)
        && padic::euler_number(2) == rat(-1, 1);
    // at (p, s) = (5, 2) the congruence is asserted modulo 5^5
    let lhs = padic::prime_power_lhs(5, 2, 2, 1, MVariant::AtM).unwrap();
    let rhs = padic::prime_power_rhs(5, 2, 2, 1).unwrap();
    let deep = padic::mod_pow(&lhs, 5, 5) == padic::mod_pow(&rhs, 5, 5);
    outcome(
        bad.is_empty() && inst && deep,
        format!(
            "{count} instances, {} bad{}; p = 5: {sun5} = -120 + 625 mod 625; (5,2) holds mod 3125: {deep}",
            bad.len(),
            bad.first().map(|b| format!(" (first {b})")).unwrap_or_default()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    for p in [5u64, 7, 11, 13] {
        let c = padic::mod_pow(&padic::prime_power_rhs(p, 1, 2, 1).unwrap(), p, 4).unwrap();
        let s = padic::mod_pow(&padic::sun_rhs(p), p, 4).unwrap();
        ok &= c == s;
    }
    let c5 = padic::prime_power_rhs(5, 1, 2, 1).unwrap();
    let inst =
        c5 == rat(-335, 8) && padic::mod_pow(&c5, 5, 4) == padic::mod_pow(&rat(-120, 1), 5, 4);
    outcome(
        ok && inst,
        format!("p in 5,7,11,13 agree; p = 5: {c5} = -120 mod 625"),
    )
}

fn criterion_8() -> Outcome {
    let a = [3u64, 5, 7, 9, 11]
        .into_iter()
        .all(|n| claims::verify_guo2018(n).unwrap().is_pass());
    let b = [3u64, 5, 7, 9].into_iter().all(|n| {
        BOTH.into_iter()
            .all(|v| claims::verify_guo2022(n, v).unwrap().is_pass())
    });
    outcome(
        a && b,
        format!("first family: {a}, second family (both truncations): {b}"),
    )
}

fn run_prop<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Check,
) -> Result<(), String> {
    let config = Config {
        failure_persistence: None,
        ..Config::with_cases(CASES)
    };
    let mut runner = TestRunner::new(config);
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn criterion_9() -> Outcome {
    let results = [
        run_prop(
            "field axioms",
            (ratfun(), ratfun(), ratfun()),
            |(a, b, c)| field_axioms(&a, &b, &c),
        ),
        run_prop(
            "gcd divisibility",
            (nonzero_poly(5), nonzero_poly(5), nonzero_poly(3)),
            |(f, g, h)| gcd_divides_both(&f, &g, &h),
        ),
        run_prop("congruence equivalence", equiv_input(), |x| {
            congruence_equivalence(&x)
        }),
        run_prop(
            "unit-shift invariance",
            (ratfun(), ratfun(), modulus(), -6i64..=6),
            |(x, y, m, s)| unit_shift(&x, &y, &m, s),
        ),
        run_prop("cyclotomic products", 1u64..=60, cyclotomic_reconstruction),
    ];
    let errs: Vec<_> = results.into_iter().filter_map(|r| r.err()).collect();
    outcome(
        errs.is_empty(),
        format!(
            "5 suites x {CASES} cases{}",
            errs.first().map(|e| format!("; {e}")).unwrap_or_default()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("main congruence sweep", criterion_1),
        ("auxiliary congruence sweep", criterion_2),
        ("identities", criterion_3),
        ("WZ relation", criterion_4),
        ("Van Hamme numerics", criterion_5),
        ("refined p-adic numerics", criterion_6),
        ("right-side agreement", criterion_7),
        ("specialisations", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let o = f();
        let mark = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {mark} {name}: {}", i + 1, o.detail);
        if !o.ok {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
