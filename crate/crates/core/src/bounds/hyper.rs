use num_bigint::BigInt;

use crate::bound::{int, ratio, BoundPair, Direction, ExactBound, Soundness};
use crate::bounds::sum_floor_log;
use crate::{floor_log_u64, Prime, Result};

/// Bounds on ν_p(H(n)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperVariant {
    /// Term-by-term substitution of the factorial bounds into the exact
    /// identity ν_p(H(n)) = pM·ν_p(n!) − p·Σ_{k<M} ν_p((pk)!), M = ⌊n/p⌋.
    Composed,
    /// pM(n/(p−1) − L − 1) − p/(2(p−1))·(M−1)(pM−2), lower.
    Printed22,
    /// p/(2(p−1))·{−2 + M[4 + 2n + p(1+M)]} − pML, lower.
    Printed23,
    /// pM(n−1)/(p−1) − p·Σ_{k<M}(2 + ⌊log_p k⌋ − pk/(p−1)), upper.
    Printed24,
    /// p/(2(p−1))·{4(p−1) + M[2 + 2n + p(M−5)]} − p·Σ_{k<M}⌊log_p k⌋, upper.
    Printed26,
}

impl HyperVariant {
    pub const PRINTED: [HyperVariant; 4] = [
        HyperVariant::Printed22,
        HyperVariant::Printed23,
        HyperVariant::Printed24,
        HyperVariant::Printed26,
    ];

    pub fn direction(self) -> Option<Direction> {
        match self {
            HyperVariant::Composed => None,
            HyperVariant::Printed22 | HyperVariant::Printed23 => Some(Direction::Lower),
            HyperVariant::Printed24 | HyperVariant::Printed26 => Some(Direction::Upper),
        }
    }
}

struct Parts {
    q: BigInt,
    m: BigInt,
    n: BigInt,
    l: BigInt,
    /// Σ_{k=1}^{M−1} ⌊log_p k⌋
    s: BigInt,
    /// M − 1, clamped so empty sums vanish
    m1: BigInt,
}

fn parts(n: u64, p: Prime) -> Result<Parts> {
    let m = n / p.get();
    let l = if n == 0 { 0 } else { floor_log_u64(n, p)? };
    Ok(Parts {
        q: BigInt::from(p.get()),
        m: BigInt::from(m),
        n: BigInt::from(n),
        l: BigInt::from(l),
        s: BigInt::from(sum_floor_log(m.saturating_sub(1), p)),
        m1: BigInt::from(m.saturating_sub(1)),
    })
}

fn composed(n: u64, p: Prime) -> Result<BoundPair> {
    let Parts {
        q,
        m,
        n: nn,
        l,
        s,
        m1,
    } = parts(n, p)?;
    let q1: BigInt = &q - 1;
    // Σ_{k=1}^{M−1} k
    let tri = &m1 * (&m1 + 1) / 2;
    let lower = if n == 0 {
        int(0)
    } else {
        // pM(n/(p−1) − L − 1) − p·Σ (pk−1)/(p−1)
        int(&q * &m) * (ratio(nn.clone(), q1.clone()) - int(&l + 1))
            - ratio(&q * (&q * &tri - &m1), q1.clone())
    };
    // pM(n−1)/(p−1) − p·Σ (pk/(p−1) − ⌊log_p k⌋ − 2)
    let upper = ratio(&q * &m * (&nn - 1), q1.clone())
        - (ratio(&q * &q * &tri, q1) - int(&q * (&s + 2 * &m1)));
    Ok(BoundPair {
        lower: ExactBound::rational(lower, Direction::Lower, Soundness::ProvedSound)
            .clamp_at_zero(),
        upper: ExactBound::rational(upper, Direction::Upper, Soundness::ProvedSound),
    })
}

fn printed(n: u64, p: Prime, variant: HyperVariant) -> Result<ExactBound> {
    let Parts {
        q,
        m,
        n: nn,
        l,
        s,
        m1,
    } = parts(n, p)?;
    let q1: BigInt = &q - 1;
    let half = ratio(q.clone(), 2 * &q1);
    let tri = &m1 * (&m1 + 1) / 2;
    let value = match variant {
        HyperVariant::Printed22 => {
            int(&q * &m) * (ratio(nn, q1.clone()) - int(&l + 1))
                - half * int((&m - 1) * (&q * &m - 2))
        }
        HyperVariant::Printed23 => {
            half * int(-2 + &m * (4 + 2 * &nn + &q * (1 + &m))) - int(&q * &m * &l)
        }
        HyperVariant::Printed24 => {
            // the sum is written with the opposite sign to the composition
            ratio(&q * &m * (&nn - 1), q1.clone()) - int(&q * (2 * &m1 + &s))
                + ratio(&q * &q * &tri, q1)
        }
        HyperVariant::Printed26 => {
            half * int(4 * &q1 + &m * (2 + 2 * &nn + &q * (&m - 5))) - int(&q * &s)
        }
        HyperVariant::Composed => unreachable!("composed handled separately"),
    };
    let direction = variant.direction().expect("printed variants are one-sided");
    Ok(ExactBound::rational(value, direction, Soundness::AsPrinted))
}

/// Composed sound pair, or the single as-printed bound of a printed variant.
pub fn hyperfactorial_val_bounds(
    n: u64,
    p: Prime,
    variant: HyperVariant,
) -> Result<alloc::vec::Vec<ExactBound>> {
    Ok(match variant {
        HyperVariant::Composed => {
            let pair = composed(n, p)?;
            alloc::vec![pair.lower, pair.upper]
        }
        v => alloc::vec![printed(n, p, v)?],
    })
}

pub fn hyperfactorial_composed(n: u64, p: Prime) -> Result<BoundPair> {
    composed(n, p)
}

pub fn hyperfactorial_printed(n: u64, p: Prime, variant: HyperVariant) -> Result<ExactBound> {
    printed(n, p, variant)
}
