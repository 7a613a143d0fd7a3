//! Sums of ⌊log_p k⌋ weighted by 1, k and k!.

use num_traits::{One, Zero};

use crate::{check_limit, Natural, Prime, Result, FACTORIAL_LOOP_LIMIT};

/// Blocks [p^j, min(p^{j+1}−1, m)] on which ⌊log_p k⌋ = j, for 1 ≤ k ≤ m.
fn blocks(m: u64, p: Prime) -> impl Iterator<Item = (u64, u64, u64)> {
    let q = p.get() as u128;
    let m = m as u128;
    let mut start = 1u128;
    let mut j = 0u64;
    core::iter::from_fn(move || {
        if start > m {
            return None;
        }
        let end = (start * q - 1).min(m);
        let block = (j, start as u64, end as u64);
        start *= q;
        j += 1;
        Some(block)
    })
}

/// Σ_{k=1}^{m} ⌊log_p k⌋.
pub fn sum_floor_log(m: u64, p: Prime) -> Natural {
    let mut total = Natural::zero();
    for (j, a, b) in blocks(m, p) {
        total += Natural::from(j as u128 * (b - a + 1) as u128);
    }
    total
}

/// Σ_{k=1}^{n} k·⌊log_p k⌋.
pub fn sum_k_floor_log(n: u64, p: Prime) -> Natural {
    let mut total = Natural::zero();
    for (j, a, b) in blocks(n, p) {
        // Σ_{k=a}^{b} k = (a+b)(b−a+1)/2
        let span = Natural::from(a as u128 + b as u128) * Natural::from(b - a + 1) / 2u32;
        total += span * j;
    }
    total
}

/// Σ_{k=1}^{n} k!·⌊log_p k⌋, one pass with a running factorial.
pub fn sum_fact_floor_log(n: u64, p: Prime) -> Result<Natural> {
    check_limit("sum_fact_floor_log", n, FACTORIAL_LOOP_LIMIT)?;
    let mut total = Natural::zero();
    let mut fact = Natural::one();
    for (j, a, b) in blocks(n, p) {
        for k in a..=b {
            fact *= k;
            if j > 0 {
                total += &fact * j;
            }
        }
    }
    Ok(total)
}
