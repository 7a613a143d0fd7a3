use num_bigint::BigInt;
use num_traits::Zero;

use crate::bound::{bigint, int, ratio, BoundPair, Direction, ExactBound, Soundness};
use crate::{floor_log, Error, Natural, Prime, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalanVariant {
    /// Factorial bounds and 0 ≤ ν_p(n+1) ≤ log_p(n+1) substituted into
    /// ν_p(C_n) = ν_p((2n)!) − 2ν_p(n!) − ν_p(n+1).
    Composed,
    /// (n+1)/(p−1) − ⌊log_p 2n⌋ − 1 − log_p(n+1) ≤ ν_p(C_n) ≤ (n−1)/(p−1) + 1 + ⌊log_p n⌋.
    Printed,
}

pub fn catalan_val_bounds(n: &Natural, p: Prime, variant: CatalanVariant) -> Result<BoundPair> {
    if n.is_zero() {
        return Err(Error::domain("catalan bounds need n ≥ 1"));
    }
    let q1 = BigInt::from(p.get() - 1);
    let l2n = floor_log(&(n << 1u32), p)?;
    let ln = floor_log(n, p)?;
    let nn = bigint(n);
    let (lower, upper, soundness) = match variant {
        CatalanVariant::Composed => (
            ratio(BigInt::from(2), q1.clone()) - int(l2n + 1),
            ratio(BigInt::from(-1), q1) + int(2 * ln + 2),
            Soundness::ProvedSound,
        ),
        CatalanVariant::Printed => (
            ratio(&nn + 1, q1.clone()) - int(l2n + 1),
            ratio(&nn - 1, q1) + int(ln + 1),
            Soundness::AsPrinted,
        ),
    };
    let mut lower =
        ExactBound::rational(lower, Direction::Lower, soundness).with_log(int(-1), n + 1u32, p);
    if variant == CatalanVariant::Composed {
        lower = lower.clamp_at_zero();
    }
    Ok(BoundPair {
        lower,
        upper: ExactBound::rational(upper, Direction::Upper, soundness),
    })
}
