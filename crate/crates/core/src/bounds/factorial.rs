use num_bigint::BigInt;
use num_traits::Zero;

use crate::bound::{bigint, int, ratio, BoundPair, Direction, ExactBound, Soundness};
use crate::{floor_log, floor_log_u64, Error, Natural, Prime, Result};

use num_rational::BigRational;

fn over_p1(num: BigInt, p: Prime) -> BigRational {
    ratio(num, BigInt::from(p.get() - 1))
}

/// max(0, n/(p−1) − ⌊log_p n⌋ − 1) ≤ ν_p(n!) ≤ (n−1)/(p−1).
pub fn factorial_val_bounds(n: &Natural, p: Prime) -> Result<BoundPair> {
    if n.is_zero() {
        return Err(Error::domain("factorial bounds need n ≥ 1"));
    }
    let l = floor_log(n, p)?;
    let n = bigint(n);
    let lower = over_p1(n.clone(), p) - int(l + 1);
    Ok(BoundPair {
        lower: ExactBound::rational(lower, Direction::Lower, Soundness::ProvedSound)
            .clamp_at_zero(),
        upper: ExactBound::rational(over_p1(n - 1, p), Direction::Upper, Soundness::ProvedSound),
    })
}

/// The cruder ν_p(n!) ≤ n/(p−1).
pub fn factorial_val_upper_crude(n: &Natural, p: Prime) -> ExactBound {
    ExactBound::rational(
        over_p1(bigint(n), p),
        Direction::Upper,
        Soundness::ProvedSound,
    )
}

/// Word-size check of both factorial bounds against a known ν_p(n!), in
/// cleared-denominator form. Returns (lower holds, upper holds).
pub fn factorial_bounds_hold_u64(n: u64, p: Prime, val: u64) -> Result<(bool, bool)> {
    if n == 0 {
        return Err(Error::domain("factorial bounds need n ≥ 1"));
    }
    let l = floor_log_u64(n, p)? as u128;
    let q1 = (p.get() - 1) as u128;
    let (n, v) = (n as u128, val as u128);
    Ok((n <= q1 * (v + l + 1), q1 * v < n))
}

/// ν_p(sf(n)) ≤ n(n−1)/(2(p−1)).
pub fn superfactorial_val_upper(n: &Natural, p: Prime) -> ExactBound {
    let n = bigint(n);
    let num = if n.is_zero() {
        BigInt::zero()
    } else {
        &n * (&n - 1)
    };
    ExactBound::rational(
        ratio(num, BigInt::from(2 * (p.get() - 1))),
        Direction::Upper,
        Soundness::ProvedSound,
    )
}
