//! Parameter sweeps: case enumeration, a bounded worker pool and the JSON
//! report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::claims::{self, ClaimId};
use crate::congruence::{Status, Verdict, Witness};
use crate::error::{Error, Result};
use crate::padic::{self, VanHamme};
use crate::q_objects::MVariant;
use crate::BigRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PadicClaim {
    VanHamme,
    Sun,
    Alpha,
    PrimePower,
}

impl PadicClaim {
    pub const ALL: [PadicClaim; 4] = [
        PadicClaim::VanHamme,
        PadicClaim::Sun,
        PadicClaim::Alpha,
        PadicClaim::PrimePower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PadicClaim::VanHamme => "vanhamme",
            PadicClaim::Sun => "sun",
            PadicClaim::Alpha => "alpha",
            PadicClaim::PrimePower => "prime_power",
        }
    }
}

/// Any claim the tool can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Q(ClaimId),
    Padic(PadicClaim),
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Q(c) => c.name(),
            Claim::Padic(c) => c.name(),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(c) = PadicClaim::ALL.into_iter().find(|c| c.name() == s) {
            return Ok(Claim::Padic(c));
        }
        s.parse().map(Claim::Q)
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn ser_display<T: fmt::Display, S: Serializer>(
    x: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

/// One claim at one parameter point. Unused parameters stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Case {
    #[serde(serialize_with = "ser_claim")]
    pub claim: Option<Claim>,
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub r: Option<i64>,
    #[serde(rename = "M", serialize_with = "ser_variant")]
    pub variant: Option<MVariant>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_display"
    )]
    pub alpha: Option<BigRat>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "series")]
    pub vanhamme: Option<String>,
    #[serde(skip)]
    pub strict: bool,
}

fn ser_claim<S: Serializer>(c: &Option<Claim>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c {
        Some(c) => c.serialize(s),
        None => s.serialize_none(),
    }
}

fn ser_variant<S: Serializer>(v: &Option<MVariant>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(v.label()),
        None => s.serialize_none(),
    }
}

impl Case {
    pub fn new(claim: Claim) -> Self {
        Case {
            claim: Some(claim),
            ..Default::default()
        }
    }

    fn need<T: Copy>(x: Option<T>, name: &str) -> Result<T> {
        x.ok_or_else(|| Error::InvalidParams(format!("missing --{name}")))
    }

    fn ndr(&self) -> Result<(u64, u64, i64)> {
        Ok((
            Self::need(self.n, "n")?,
            Self::need(self.d, "d")?,
            Self::need(self.r, "r")?,
        ))
    }

    fn m(&self) -> MVariant {
        self.variant.unwrap_or(MVariant::AtM)
    }

    /// Runs the verifier named by this case.
    pub fn evaluate(&self) -> Result<Verdict> {
        use ClaimId as C;
        let claim = Self::need(self.claim, "claim")?;
        match claim {
            Claim::Q(c) => match c {
                C::Sym3 => {
                    let (n, d, r) = self.ndr()?;
                    match self.k {
                        Some(k) => claims::verify_sym3(n, d, r, k),
                        None => sym3_all(n, d, r),
                    }
                }
                C::ModPhi2 => self
                    .ndr()
                    .and_then(|(n, d, r)| claims::verify_modphi2(n, d, r)),
                C::LiangduanA => self
                    .ndr()
                    .and_then(|(n, d, r)| claims::verify_liangduan(n, d, r)),
                C::Truncon => self
                    .ndr()
                    .and_then(|(n, d, r)| claims::verify_truncon(n, d, r)),
                C::Denoms => {
                    let (n, d, r) = self.ndr()?;
                    claims::verify_denoms(n, d, r, self.strict)
                }
                C::Fmm => self.ndr().and_then(|(n, d, r)| claims::verify_fmm(n, d, r)),
                C::Gm1k => self
                    .ndr()
                    .and_then(|(n, d, r)| claims::verify_gm1k(n, d, r)),
                C::Identity => claims::verify_identity(Self::need(self.n, "n")?),
                C::IdentityRec => claims::verify_identity_rec(Self::need(self.n, "n")?),
                C::JacksonTrunc => self
                    .ndr()
                    .and_then(|(n, d, r)| claims::verify_jackson_trunc(n, d, r)),
                C::WzRelation => claims::verify_wz_relation(
                    Self::need(self.d, "d")?,
                    Self::need(self.r, "r")?,
                    WZ_KMAX,
                    WZ_LMAX,
                ),
                C::Telescoping => self
                    .ndr()
                    .and_then(|(n, d, r)| claims::verify_telescoping(n, d, r)),
                C::MainTh => {
                    let (n, d, r) = self.ndr()?;
                    claims::verify_mainth(n, d, r, self.m())
                }
                C::Guo2018 => claims::verify_guo2018(Self::need(self.n, "n")?),
                C::Guo2022 => claims::verify_guo2022(Self::need(self.n, "n")?, self.m()),
            },
            Claim::Padic(c) => {
                let p = Self::need(self.p, "p")?;
                match c {
                    PadicClaim::VanHamme => {
                        let v: VanHamme = self.vanhamme.as_deref().unwrap_or("B2").parse()?;
                        padic::verify_vanhamme(p, v)
                    }
                    PadicClaim::Sun => padic::verify_sun(p, self.m()),
                    PadicClaim::Alpha => {
                        let alpha = Self::need(self.alpha.as_ref(), "alpha")?;
                        padic::verify_alpha(p, alpha, self.m())
                    }
                    PadicClaim::PrimePower => padic::verify_prime_power(
                        p,
                        self.s.unwrap_or(1),
                        Self::need(self.d, "d")?,
                        Self::need(self.r, "r")?,
                        self.m(),
                    ),
                }
            }
        }
    }
}

/// Grid used for the WZ relation in sweeps and single checks.
pub const WZ_KMAX: u64 = 10;
pub const WZ_LMAX: u64 = 10;

/// The symmetry congruence for every admissible `k`.
pub fn sym3_all(n: u64, d: u64, r: i64) -> Result<Verdict> {
    let Some(top) = claims::sym3_k_max(n, d, r)? else {
        return Ok(Verdict::inapplicable(Witness::Note(
            "empty range of k".into(),
        )));
    };
    let mut out = Vec::new();
    for k in 0..=top {
        out.push(claims::verify_sym3(n, d, r, k)?.with_context(format!("k = {k}")));
    }
    Ok(Verdict::all(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Pass,
    Fail,
    Inapplicable,
    Invalid,
}

impl From<Status> for RecordStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Pass => RecordStatus::Pass,
            Status::Fail => RecordStatus::Fail,
            Status::Inapplicable => RecordStatus::Inapplicable,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    #[serde(flatten)]
    pub case: Case,
    pub status: RecordStatus,
    pub witness: Option<String>,
    pub elapsed_ms: f64,
}

/// Evaluates a case. Parameter violations yield `None` (skipped).
pub fn run_case(case: &Case) -> Option<Record> {
    let start = Instant::now();
    let result = case.evaluate();
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let (status, witness) = match result {
        Ok(v) => (v.status.into(), v.witness.map(|w| w.to_string())),
        Err(Error::InvalidParams(_)) => return None,
        Err(e) => (RecordStatus::Invalid, Some(e.to_string())),
    };
    Some(Record {
        case: case.clone(),
        status,
        witness,
        elapsed_ms,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepConfig {
    pub claims: Vec<Claim>,
    pub n_range: (u64, u64),
    pub d_range: (u64, u64),
    pub r_range: (i64, i64),
    #[serde(rename = "M", serialize_with = "ser_variants")]
    pub variants: Vec<MVariant>,
    pub primes: Vec<u64>,
    pub s_values: Vec<u32>,
    #[serde(serialize_with = "ser_alphas")]
    pub alphas: Vec<BigRat>,
    pub strict_denoms: bool,
    pub jobs: usize,
}

fn ser_variants<S: Serializer>(v: &[MVariant], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|v| v.label()))
}

fn ser_alphas<S: Serializer>(v: &[BigRat], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|a| a.to_string()))
}

impl Default for SweepConfig {
    fn default() -> Self {
        let mut claims: Vec<Claim> = ClaimId::ALL.into_iter().map(Claim::Q).collect();
        claims.extend(PadicClaim::ALL.into_iter().map(Claim::Padic));
        SweepConfig {
            claims,
            n_range: (2, 12),
            d_range: (1, 4),
            r_range: (-5, 5),
            variants: vec![MVariant::AtM, MVariant::AtNMinus1],
            primes: vec![5, 7, 11, 13],
            s_values: vec![1, 2],
            alphas: ["1", "1/2", "1/3", "2/3", "3/4"]
                .iter()
                .map(|a| a.parse().unwrap())
                .collect(),
            strict_denoms: false,
            jobs: 1,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParams(format!("{what} is empty")));
        if self.n_range.0 > self.n_range.1 {
            return bad("n range");
        }
        if self.d_range.0 > self.d_range.1 {
            return bad("d range");
        }
        if self.r_range.0 > self.r_range.1 {
            return bad("r range");
        }
        if self.variants.is_empty() {
            return bad("M variant list");
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParams("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn ns(&self) -> impl Iterator<Item = u64> + Clone {
        self.n_range.0..=self.n_range.1
    }

    fn drs(&self) -> Vec<(u64, i64)> {
        let mut out = Vec::new();
        for d in self.d_range.0..=self.d_range.1 {
            for r in self.r_range.0..=self.r_range.1 {
                if d > 0 && (d as i64).gcd(&r) == 1 {
                    out.push((d, r));
                }
            }
        }
        out
    }

    /// All cases, and the number of grid points dropped by gcd conditions.
    pub fn cases(&self) -> (Vec<Case>, usize) {
        let mut out = Vec::new();
        let mut skipped = 0;
        let grid = (self.n_range.1 + 1 - self.n_range.0) as usize
            * (self.d_range.1 + 1 - self.d_range.0) as usize
            * (self.r_range.1 - self.r_range.0 + 1) as usize;
        let ndr: Vec<(u64, u64, i64)> = self
            .ns()
            .flat_map(|n| self.drs().into_iter().map(move |(d, r)| (n, d, r)))
            .filter(|&(n, d, _)| n.gcd(&d) == 1)
            .collect();
        for &claim in &self.claims {
            let base = Case::new(claim);
            match claim {
                Claim::Q(c) => match c {
                    ClaimId::Identity | ClaimId::IdentityRec | ClaimId::Guo2018 => {
                        out.extend(self.ns().map(|n| Case {
                            n: Some(n),
                            ..base.clone()
                        }));
                    }
                    ClaimId::Guo2022 => {
                        for n in self.ns() {
                            for &v in &self.variants {
                                out.push(Case {
                                    n: Some(n),
                                    variant: Some(v),
                                    ..base.clone()
                                });
                            }
                        }
                    }
                    ClaimId::WzRelation => {
                        out.extend(self.drs().into_iter().map(|(d, r)| Case {
                            d: Some(d),
                            r: Some(r),
                            ..base.clone()
                        }));
                    }
                    _ => {
                        skipped += grid - ndr.len();
                        let variants = if c == ClaimId::MainTh {
                            self.variants.iter().map(|&v| Some(v)).collect()
                        } else {
                            vec![None]
                        };
                        for &(n, d, r) in &ndr {
                            for &v in &variants {
                                out.push(Case {
                                    n: Some(n),
                                    d: Some(d),
                                    r: Some(r),
                                    variant: v,
                                    strict: c == ClaimId::Denoms && self.strict_denoms,
                                    ..base.clone()
                                });
                            }
                        }
                    }
                },
                Claim::Padic(c) => {
                    for &p in &self.primes {
                        let at_p = Case {
                            p: Some(p),
                            ..base.clone()
                        };
                        match c {
                            PadicClaim::VanHamme => {
                                for v in ["B2", "E2", "F2"] {
                                    out.push(Case {
                                        vanhamme: Some(v.into()),
                                        ..at_p.clone()
                                    });
                                }
                            }
                            PadicClaim::Sun => {
                                for &v in &self.variants {
                                    out.push(Case {
                                        variant: Some(v),
                                        ..at_p.clone()
                                    });
                                }
                            }
                            PadicClaim::Alpha => {
                                for a in &self.alphas {
                                    for &v in &self.variants {
                                        out.push(Case {
                                            alpha: Some(a.clone()),
                                            variant: Some(v),
                                            ..at_p.clone()
                                        });
                                    }
                                }
                            }
                            PadicClaim::PrimePower => {
                                for &s in &self.s_values {
                                    for (d, r) in self.drs() {
                                        if r <= 0 || d % p == 0 {
                                            skipped += 1;
                                            continue;
                                        }
                                        for &v in &self.variants {
                                            out.push(Case {
                                                s: Some(s),
                                                d: Some(d),
                                                r: Some(r),
                                                variant: Some(v),
                                                ..at_p.clone()
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        (out, skipped)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub invalid: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: SweepConfig,
    pub counts: Counts,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(config: SweepConfig, mut records: Vec<Record>, skipped: usize) -> Self {
        records.sort_by(|a, b| a.case.cmp(&b.case));
        let mut counts = Counts {
            skipped,
            ..Counts::default()
        };
        for r in &records {
            match r.status {
                RecordStatus::Pass => counts.pass += 1,
                RecordStatus::Fail => counts.fail += 1,
                RecordStatus::Inapplicable => counts.inapplicable += 1,
                RecordStatus::Invalid => counts.invalid += 1,
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION"),
            config,
            counts,
            records,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Runs every case on a pool of `config.jobs` threads.
pub fn run(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let (cases, mut skipped) = config.cases();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let results: Vec<Option<Record>> = pool.install(|| cases.par_iter().map(run_case).collect());
    let mut records = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Some(r) => records.push(r),
            None => skipped += 1,
        }
    }
    Ok(Report::new(config.clone(), records, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(claims: Vec<Claim>) -> SweepConfig {
        SweepConfig {
            claims,
            n_range: (2, 5),
            d_range: (1, 2),
            r_range: (-1, 2),
            primes: vec![5],
            ..SweepConfig::default()
        }
    }

    #[test]
    fn claim_names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<Claim>(), Ok(Claim::Q(c)));
        }
        for c in PadicClaim::ALL {
            assert_eq!(c.name().parse::<Claim>(), Ok(Claim::Padic(c)));
        }
        assert!("nope".parse::<Claim>().is_err());
    }

    #[test]
    fn counts_add_up_and_order_is_stable() {
        let cfg = small(vec![
            Claim::Q(ClaimId::MainTh),
            Claim::Q(ClaimId::Gm1k),
            Claim::Padic(PadicClaim::Sun),
        ]);
        let a = run(&cfg).unwrap();
        let b = run(&SweepConfig { jobs: 3, ..cfg }).unwrap();
        let c = a.counts;
        assert_eq!(
            c.pass + c.fail + c.inapplicable + c.invalid,
            a.records.len()
        );
        assert_eq!(c.fail, 0);
        let keys = |r: &Report| r.records.iter().map(|x| x.case.clone()).collect::<Vec<_>>();
        assert_eq!(keys(&a), keys(&b));
    }

    #[test]
    fn strict_denoms_fail() {
        let cfg = SweepConfig {
            strict_denoms: true,
            ..small(vec![Claim::Q(ClaimId::Denoms)])
        };
        let rep = run(&cfg).unwrap();
        assert!(rep.counts.fail > 0);
        assert!(rep
            .records
            .iter()
            .any(|r| r.witness.as_deref().is_some_and(|w| w.ends_with("q - 1"))));
    }

    #[test]
    fn empty_case_set() {
        let cfg = SweepConfig {
            d_range: (2, 2),
            r_range: (0, 0),
            ..small(vec![Claim::Q(ClaimId::MainTh)])
        };
        let rep = run(&cfg).unwrap();
        assert!(rep.records.is_empty());
        assert_eq!(rep.counts.fail, 0);
    }

    #[test]
    fn json_field_names() {
        let rep = run(&small(vec![Claim::Q(ClaimId::MainTh)])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        let rec = &v["records"][0];
        for f in [
            "claim",
            "n",
            "d",
            "r",
            "M",
            "status",
            "witness",
            "elapsed_ms",
        ] {
            assert!(rec.get(f).is_some(), "missing {f}");
        }
        assert_eq!(rec["claim"], "mainth");
    }
}
