use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qcert_cli::{exit_code, parse_list, parse_range, sweep_exit_code, EXIT_FAIL, EXIT_USAGE};
use qcert_core::q_objects::MVariant;
use qcert_core::sweep::{self, Case, Claim, PadicClaim, RecordStatus, SweepConfig};

#[derive(Parser)]
#[command(
    name = "qcert",
    version,
    about = "Exact certification of q-supercongruences"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check one claim at one parameter point.
    Verify(PointArgs),
    /// Check claims over parameter ranges and write a JSON report.
    Sweep(SweepArgs),
    /// Check a p-adic claim at one or more primes.
    Padic(PointArgs),
    /// Summarise a report written by `sweep`.
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    claim: String,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    /// Truncation: m (or half) and full
    #[arg(long = "M", value_parser = parse_variant)]
    m: Option<MVariant>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long = "p-list", value_parser = parse_list::<u64>)]
    p_list: Option<::std::vec::Vec<u64>>,
    #[arg(long)]
    s: Option<u32>,
    /// Rational parameter NUM/DEN
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<BigRational>,
    /// Van Hamme series: B2, E2 or F2
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    strict_denoms: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated claim names, or "all"
    #[arg(long, default_value = "all")]
    claim: String,
    #[arg(long = "n-range", value_parser = parse_range::<u64>)]
    n_range: Option<(u64, u64)>,
    #[arg(long = "d-range", value_parser = parse_range::<u64>)]
    d_range: Option<(u64, u64)>,
    #[arg(long = "r-range", allow_hyphen_values = true, value_parser = parse_range::<i64>)]
    r_range: Option<(i64, i64)>,
    /// Truncations, comma-separated
    #[arg(long = "M", value_parser = parse_list::<MVariant>)]
    m: Option<::std::vec::Vec<MVariant>>,
    #[arg(long = "p-list", value_parser = parse_list::<u64>)]
    p_list: Option<::std::vec::Vec<u64>>,
    #[arg(long, value_parser = parse_list::<u32>)]
    s: Option<::std::vec::Vec<u32>>,
    #[arg(long, value_parser = parse_list::<BigRational>)]
    alpha: Option<::std::vec::Vec<BigRational>>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    strict_denoms: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ReportArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_variant(s: &str) -> Result<MVariant, String> {
    s.parse().map_err(|e: qcert_core::Error| e.to_string())
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn base_case(a: &PointArgs, claim: Claim) -> Case {
    Case {
        n: a.n,
        d: a.d,
        r: a.r,
        variant: a.m,
        k: a.k,
        p: a.p,
        s: a.s,
        alpha: a.alpha.clone(),
        vanhamme: a.variant.clone(),
        strict: a.strict_denoms,
        ..Case::new(claim)
    }
}

fn label(c: &Case) -> String {
    let mut parts = Vec::new();
    let mut push = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            parts.push(format!("{k}={v}"));
        }
    };
    push("series", c.vanhamme.clone());
    push("p", c.p.map(|x| x.to_string()));
    push("s", c.s.map(|x| x.to_string()));
    push("alpha", c.alpha.as_ref().map(|x| x.to_string()));
    push("n", c.n.map(|x| x.to_string()));
    push("d", c.d.map(|x| x.to_string()));
    push("r", c.r.map(|x| x.to_string()));
    push("k", c.k.map(|x| x.to_string()));
    push("M", c.variant.map(|x| x.label().to_string()));
    format!("{} ({})", c.claim.unwrap(), parts.join(", "))
}

/// Evaluates each case and prints one line (or JSON record) per case.
fn run_points(cases: Vec<Case>, format: Format) -> u8 {
    let mut statuses = Vec::new();
    for case in cases {
        let start = std::time::Instant::now();
        match case.evaluate() {
            Ok(v) => {
                let rec = sweep::Record {
                    case: case.clone(),
                    status: v.status.into(),
                    witness: v.witness.as_ref().map(|w| w.to_string()),
                    elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                };
                match format {
                    Format::Text => match &rec.witness {
                        Some(w) => println!("{}: {} [{w}]", label(&case), v.status),
                        None => println!("{}: {}", label(&case), v.status),
                    },
                    Format::Json => println!("{}", serde_json::to_string(&rec).unwrap()),
                }
                statuses.push(rec.status);
            }
            Err(e) => {
                eprintln!("error: {}: {e}", label(&case));
                statuses.push(RecordStatus::Invalid);
            }
        }
    }
    exit_code(statuses)
}

fn cmd_verify(a: PointArgs) -> u8 {
    let claim: Claim = match a.claim.parse() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    if a.p_list.is_some() {
        return usage("--p-list belongs to the padic subcommand");
    }
    run_points(vec![base_case(&a, claim)], a.format)
}

fn cmd_padic(a: PointArgs) -> u8 {
    let claim = match a.claim.parse() {
        Ok(c @ Claim::Padic(_)) => c,
        Ok(c) => return usage(format!("{c} is not a p-adic claim")),
        Err(e) => return usage(e),
    };
    let primes = match (&a.p_list, a.p) {
        (Some(ps), None) => ps.clone(),
        (None, Some(p)) => vec![p],
        _ => return usage("give exactly one of --p and --p-list"),
    };
    if claim == Claim::Padic(PadicClaim::Alpha) && a.alpha.is_none() {
        return usage("alpha needs --alpha");
    }
    let cases = primes
        .into_iter()
        .map(|p| Case {
            p: Some(p),
            ..base_case(&a, claim)
        })
        .collect();
    run_points(cases, a.format)
}

fn cmd_sweep(a: SweepArgs) -> u8 {
    let mut cfg = SweepConfig::default();
    if a.claim != "all" {
        match parse_list::<Claim>(&a.claim) {
            Ok(c) => cfg.claims = c,
            Err(e) => return usage(e),
        }
    }
    if let Some(x) = a.n_range {
        cfg.n_range = x;
    }
    if let Some(x) = a.d_range {
        cfg.d_range = x;
    }
    if let Some(x) = a.r_range {
        cfg.r_range = x;
    }
    if let Some(x) = a.m {
        cfg.variants = x;
    }
    if let Some(x) = a.p_list {
        cfg.primes = x;
    }
    if let Some(x) = a.s {
        cfg.s_values = x;
    }
    if let Some(x) = a.alpha {
        cfg.alphas = x;
    }
    cfg.jobs = a.jobs;
    cfg.strict_denoms = a.strict_denoms;
    let report = match sweep::run(&cfg) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let json = report.to_json();
    match &a.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                return usage(format!("cannot write {}: {e}", path.display()));
            }
        }
        None if a.format == Format::Json => println!("{json}"),
        None => {}
    }
    if a.format == Format::Text {
        for r in &report.records {
            if r.status != RecordStatus::Pass {
                let w = r.witness.as_deref().unwrap_or("");
                println!("{}: {} [{w}]", label(&r.case), status_name(r.status));
            }
        }
        let c = report.counts;
        println!(
            "pass {} fail {} inapplicable {} invalid {} skipped {}",
            c.pass, c.fail, c.inapplicable, c.invalid, c.skipped
        );
    }
    sweep_exit_code(report.records.iter().map(|r| r.status))
}

fn status_name(s: RecordStatus) -> &'static str {
    match s {
        RecordStatus::Pass => "pass",
        RecordStatus::Fail => "fail",
        RecordStatus::Inapplicable => "inapplicable",
        RecordStatus::Invalid => "invalid",
    }
}

fn cmd_report(a: ReportArgs) -> u8 {
    let text = match std::fs::read_to_string(&a.path) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read {}: {e}", a.path.display())),
    };
    let v: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return usage(format!("malformed report: {e}")),
    };
    let Some(records) = v["records"].as_array() else {
        return usage("report has no records array");
    };
    let mut statuses = Vec::new();
    let mut fails = Vec::new();
    for r in records {
        let s = match r["status"].as_str() {
            Some("pass") => RecordStatus::Pass,
            Some("fail") => RecordStatus::Fail,
            Some("inapplicable") => RecordStatus::Inapplicable,
            Some("invalid") => RecordStatus::Invalid,
            _ => return usage("record without a valid status"),
        };
        if s == RecordStatus::Fail {
            fails.push(r);
        }
        statuses.push(s);
    }
    match a.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&v["counts"]).unwrap()),
        Format::Text => {
            for r in &fails {
                println!("fail: {r}");
            }
            let count = |s| statuses.iter().filter(|&&x| x == s).count();
            println!(
                "{} records: pass {} fail {} inapplicable {} invalid {}",
                statuses.len(),
                count(RecordStatus::Pass),
                count(RecordStatus::Fail),
                count(RecordStatus::Inapplicable),
                count(RecordStatus::Invalid)
            );
        }
    }
    if fails.is_empty() {
        sweep_exit_code(statuses)
    } else {
        EXIT_FAIL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Sweep(a) => cmd_sweep(a),
        Cmd::Padic(a) => cmd_padic(a),
        Cmd::Report(a) => cmd_report(a),
    };
    ExitCode::from(code)
}
