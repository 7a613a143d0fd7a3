use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bound::{int, ratio, BoundPair, Direction, ExactBound, Soundness, Verdict};
use crate::stirling::{stirling_decompose, StirlingDecomposition};
use crate::valuation::{factorial_val_u64, stirling1_val};
use crate::{floor_log_u64, Error, Prime, Result};

/// Bounds on ν_p|s(n+1, k+1)| from the decomposition n = k·p^r + m, with the
/// factorial bounds applied to ν_p(m!). `None` when m = 0, where the value
/// k((p^r−1)/(p−1) − r) is exact.
pub fn stirling_val_bounds(dec: &StirlingDecomposition) -> Result<Option<BoundPair>> {
    if dec.m == 0 {
        return Ok(None);
    }
    let base = int(BigInt::from(dec.k) * dec.repunit_excess());
    let q1 = dec.p.get() - 1;
    let fl = floor_log_u64(dec.m, dec.p)?;
    let lower = &base + ratio(dec.m, q1) - int(fl + 1);
    let upper = base + ratio(dec.m - 1, q1);
    Ok(Some(BoundPair {
        lower: ExactBound::rational(lower, Direction::Lower, Soundness::ProvedSound)
            .clamp_at_zero(),
        upper: ExactBound::rational(upper, Direction::Upper, Soundness::ProvedSound),
    }))
}

/// Largest r with k·p^r ≤ n (so ⌊log_p(n/k)⌋), for 1 ≤ k ≤ n.
fn level(n: u64, k: u64, p: Prime) -> Result<u32> {
    if k == 0 || k > n {
        return Err(Error::domain("needs 1 ≤ k ≤ n"));
    }
    let q = p.get() as u128;
    let mut r = 0u32;
    let mut top = k as u128 * q;
    while top <= n as u128 {
        r += 1;
        top *= q;
    }
    Ok(r)
}

/// ν_p(n!) − ν_p(⌊n/p^r⌋!) − kr ≤ ν_p|s(n+1, k+1)|, where k·p^r ≤ n < k·p^{r+1}.
pub fn stirling_val_lower_general(n: u64, k: u64, p: Prime) -> Result<ExactBound> {
    let r = level(n, k, p)?;
    let top = factorial_val_u64(n, p)? as i128;
    let inner = factorial_val_u64(n / p.get().pow(r), p)? as i128;
    let value = top - inner - (k as i128) * (r as i128);
    Ok(ExactBound::integer(value, Direction::Lower, Soundness::ProvedSound).clamp_at_zero())
}

/// The normalized two-sided statement for n ∈ A_{k,p}, n > k:
/// k/(n−k)·L ≤ 1/(p−1) − ν/(n−k) ≤ (k+1)/(n−k)·L with L = ⌊log_p(n/k)⌋.
#[derive(Clone, Debug)]
pub struct NormalizedStirling {
    /// 1/(p−1) − ν/(n−k)
    pub middle: BigRational,
    pub bounds: BoundPair,
}

impl NormalizedStirling {
    pub fn verdicts(&self) -> (Verdict, Verdict) {
        (
            self.bounds.lower.verdict_ratio(&self.middle),
            self.bounds.upper.verdict_ratio(&self.middle),
        )
    }

    pub fn holds(&self) -> bool {
        self.verdicts() == (Verdict::Holds, Verdict::Holds)
    }
}

pub fn stirling_normalized(n: u64, k: u64, p: Prime, val: u64) -> Result<NormalizedStirling> {
    if n <= k || stirling_decompose(n, k, p)?.is_none() {
        return Err(Error::domain("needs n ∈ A_{k,p} and n > k"));
    }
    let l = level(n, k, p)? as u64;
    let d = n - k;
    let middle = ratio(1, p.get() - 1) - ratio(val, d);
    let sound = Soundness::ProvedSound;
    Ok(NormalizedStirling {
        middle,
        bounds: BoundPair {
            lower: ExactBound::rational(ratio(k * l, d), Direction::Lower, sound),
            upper: ExactBound::rational(ratio((k + 1) * l, d), Direction::Upper, sound),
        },
    })
}

/// Evaluates the normalized statement with the exact Stirling valuation.
pub fn stirling_normalized_check(n: u64, k: u64, p: Prime) -> Result<bool> {
    let v = stirling1_val(n + 1, k + 1, p)?.to_u64().expect("small");
    Ok(stirling_normalized(n, k, p, v)?.holds())
}
