use num_bigint::BigInt;

use crate::bound::{int, ratio, Direction, ExactBound, Soundness, Verdict};
use crate::valuation::narayana_val3;
use crate::{floor_log_u64, Error, Prime, Result};

const DELTAS: [u64; 4] = [0, 1, 3, 8];

/// The Narayana chain at n, with m read as n:
/// m/2 − ⌊log_3 m⌋ − 1 ≤ ν_3(a_n) ≤ ν_3[n(n+1)(n+3)(n+8)] + 6 ≤ 4·max_δ ν_3(n+δ) + 6.
#[derive(Clone, Debug)]
pub struct NarayanaAudit {
    pub n: u64,
    pub exact: u64,
    /// ν_3[n(n+1)(n+3)(n+8)] + 6
    pub middle: u64,
    /// 4·max_δ ν_3(n+δ) + 6
    pub top: u64,
    pub m_lower: ExactBound,
}

impl NarayanaAudit {
    pub fn upper_verdict(&self) -> Verdict {
        Verdict::from_ordering(Direction::Upper, Some(self.middle.cmp(&self.exact)))
    }

    pub fn delta_verdict(&self) -> Verdict {
        Verdict::from_ordering(Direction::Upper, Some(self.top.cmp(&self.middle)))
    }

    pub fn m_lower_verdict(&self) -> Verdict {
        self.m_lower.verdict(&BigInt::from(self.exact))
    }
}

fn nu3(x: u64) -> u64 {
    crate::arith::nu_u64(x, 3)
}

/// The chain at n given ν_3(a_n).
pub fn narayana_chain(n: u64, exact: u64) -> Result<NarayanaAudit> {
    if n == 0 {
        return Err(Error::domain("Narayana chain needs n ≥ 1"));
    }
    let middle = DELTAS.iter().map(|d| nu3(n + d)).sum::<u64>() + 6;
    let top = 4 * DELTAS.iter().map(|d| nu3(n + d)).max().expect("nonempty") + 6;
    let three = Prime::new(3).expect("3 is prime");
    let m_lower = ExactBound::rational(
        ratio(n, 2) - int(floor_log_u64(n, three)? + 1),
        Direction::Lower,
        Soundness::AsPrinted,
    );
    Ok(NarayanaAudit {
        n,
        exact,
        middle,
        top,
        m_lower,
    })
}

pub fn narayana_audit_bound(n: u64) -> Result<NarayanaAudit> {
    let exact = narayana_val3(n)?.to_u64().expect("small");
    narayana_chain(n, exact)
}
