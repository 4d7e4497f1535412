//! Argument parsing helpers and the exit-code contract.

use qcert_core::sweep::RecordStatus;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Any Fail gives 1; otherwise anything but a pass gives 2.
pub fn exit_code(statuses: impl IntoIterator<Item = RecordStatus>) -> u8 {
    let mut code = EXIT_PASS;
    for s in statuses {
        match s {
            RecordStatus::Pass => {}
            RecordStatus::Fail => return EXIT_FAIL,
            RecordStatus::Inapplicable | RecordStatus::Invalid => code = EXIT_USAGE,
        }
    }
    code
}

/// Sweep exit: Fail dominates, invalid records count as errors, while
/// Inapplicable records are reported but do not fail the run.
pub fn sweep_exit_code(statuses: impl IntoIterator<Item = RecordStatus>) -> u8 {
    exit_code(
        statuses
            .into_iter()
            .filter(|&s| s != RecordStatus::Inapplicable),
    )
}

/// `A..B` or `A..=B`, both inclusive; a single value `A` means `A..A`.
pub fn parse_range<T: std::str::FromStr + PartialOrd>(s: &str) -> Result<(T, T), String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let parse = |x: &str| {
        x.trim()
            .parse::<T>()
            .map_err(|_| format!("malformed range {s:?}"))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| format!("malformed list entry {x:?}"))
        })
        .collect()
}
