use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

use crate::bound::{ExactBound, Soundness, Verdict};
use crate::interval::Interval;

/// Exact values longer than this many digits are rendered approximately.
pub const EXACT_DIGITS: usize = 60;

/// One side of an audited inequality.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(BigInt),
    Ratio(BigRational),
    /// A real enclosed by an interval.
    Real(Interval),
    /// exp of the enclosed interval.
    LnReal(Interval),
    /// Pre-rendered approximation of an exact value too long to print.
    Approx(String),
    Empty,
}

fn digits(x: &BigInt) -> usize {
    // bits·log10(2) over-counts by at most one
    (x.bits() as usize * 30103).div_ceil(100_000)
}

/// `~d.ddddddddde<exp>`, truncated to ten significant digits.
///
/// Takes the leading digits from one division by a power of ten, so a
/// factorial-sized value never goes through a full decimal conversion.
fn sci(x: &BigInt) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let shift = digits(x).saturating_sub(12);
    let head = x.magnitude() / BigUint::from(10u32).pow(shift as u32);
    let s = head.to_string();
    let lead = &s[..1];
    let tail = s[1..s.len().min(10)].trim_end_matches('0');
    let sep = if tail.is_empty() { "" } else { "." };
    format!("~{sign}{lead}{sep}{tail}e{}", s.len() - 1 + shift)
}

/// Up to ten significant digits, trailing zeros trimmed.
pub(crate) fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = libm::floor(libm::log10(libm::fabs(x))) as i32;
    if !(-4..15).contains(&mag) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').into()
    } else {
        s
    }
}

/// f64 approximation of a ratio whose parts may both overflow a double.
fn ratio_f64(x: &BigRational) -> f64 {
    let shift = 128u64 + x.denom().bits().saturating_sub(x.numer().bits());
    let q: BigInt = (x.numer() << shift) / x.denom();
    let v = Interval::from_bigint(&q).mid();
    libm::ldexp(v, -(shift as i32))
}

impl Value {
    pub fn int(x: impl Into<BigInt>) -> Self {
        let x = x.into();
        if digits(&x) > EXACT_DIGITS
            && *x.magnitude() >= BigUint::from(10u32).pow(EXACT_DIGITS as u32)
        {
            Value::Approx(sci(&x))
        } else {
            Value::Int(x)
        }
    }

    pub fn ratio(x: BigRational) -> Self {
        if digits(x.numer()) <= EXACT_DIGITS && digits(x.denom()) <= EXACT_DIGITS {
            let x = BigRational::new(x.numer().clone(), x.denom().clone());
            return if x.is_integer() {
                Value::int(x.to_integer())
            } else {
                Value::Ratio(x)
            };
        }
        if x.is_integer() {
            return Value::int(x.to_integer());
        }
        let whole = x.to_integer();
        if digits(&whole) > 15 {
            Value::Approx(sci(&whole))
        } else {
            Value::Approx(format!("~{}", format_real(ratio_f64(&x))))
        }
    }

    pub fn bound(b: &ExactBound) -> Self {
        match b.as_ratio() {
            Some(r) => Value::ratio(r.clone()),
            None => Value::Real(b.interval()),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Value::Empty)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Ratio(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Value::Real(i) => write!(f, "~{}", format_real(i.mid())),
            Value::LnReal(i) => {
                let m = i.mid();
                if m < 700.0 {
                    write!(f, "~{}", format_real(libm::exp(m)))
                } else {
                    write!(f, "~exp({})", format_real(m))
                }
            }
            Value::Approx(s) => f.write_str(s),
            Value::Empty => Ok(()),
        }
    }
}

/// One evaluated point of one case.
#[derive(Clone, Debug, PartialEq)]
pub struct AuditRecord {
    pub case_id: &'static str,
    pub soundness: Soundness,
    pub p: Option<u64>,
    pub n: u64,
    pub k: Option<u64>,
    pub r: Option<u32>,
    pub m: Option<u64>,
    /// The exact quantity.
    pub lhs: Value,
    /// The bound it is compared against.
    pub rhs: Value,
    pub verdict: Verdict,
}

impl AuditRecord {
    pub(crate) fn new(case_id: &'static str, soundness: Soundness, p: Option<u64>, n: u64) -> Self {
        AuditRecord {
            case_id,
            soundness,
            p,
            n,
            k: None,
            r: None,
            m: None,
            lhs: Value::Empty,
            rhs: Value::Empty,
            verdict: Verdict::Holds,
        }
    }

    pub(crate) fn with_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub(crate) fn values(mut self, lhs: Value, rhs: Value, verdict: Verdict) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.verdict = verdict;
        self
    }

    /// Sort key: (case_id, p, n, k).
    pub fn key(&self) -> (&'static str, Option<u64>, u64, Option<u64>) {
        (self.case_id, self.p, self.n, self.k)
    }

    pub fn is_finding(&self) -> bool {
        self.verdict == Verdict::Violated && self.soundness == Soundness::AsPrinted
    }

    pub fn is_sound_violation(&self) -> bool {
        self.verdict == Verdict::Violated && self.soundness == Soundness::ProvedSound
    }
}

pub(crate) fn sort_records(records: &mut [AuditRecord]) {
    records.sort_by(|a, b| a.key().cmp(&b.key()));
}

/// Per-verdict counts and the exit code of a scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub records: usize,
    pub holds: usize,
    pub violated: usize,
    pub indeterminate: usize,
    pub reported: usize,
    /// Violations of as-printed cases.
    pub findings: usize,
    /// Violations of proved-sound cases.
    pub sound_violations: usize,
}

impl AuditSummary {
    pub fn of(records: &[AuditRecord]) -> Self {
        let mut s = AuditSummary {
            records: records.len(),
            ..Default::default()
        };
        for r in records {
            match r.verdict {
                Verdict::Holds => s.holds += 1,
                Verdict::Violated => s.violated += 1,
                Verdict::Indeterminate => s.indeterminate += 1,
                Verdict::Reported => s.reported += 1,
            }
            s.findings += r.is_finding() as usize;
            s.sound_violations += r.is_sound_violation() as usize;
        }
        s
    }

    /// 1 when any proved-sound case is violated, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.sound_violations > 0 {
            1
        } else {
            0
        }
    }
}
