//! Exact integer sequences whose valuations have no closed form here.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::{Error, Natural, Result};

/// Cap for the quadratic-time tables (Bell triangle, Stirling rows).
pub const TABLE_LIMIT: u64 = 5000;

/// Cap for the linear recurrences.
pub const LINEAR_LIMIT: u64 = 1 << 20;

fn check(what: &'static str, n: u64, cap: u64) -> Result<()> {
    if n > cap {
        Err(Error::resource(what, n, cap))
    } else {
        Ok(())
    }
}

fn to_natural(what: &'static str, v: BigInt) -> Result<Natural> {
    match v.sign() {
        Sign::Minus => Err(Error::inconsistency(what, v, "nonnegative")),
        _ => Ok(v.into_parts().1),
    }
}

/// !n by the recurrence !n = n·!(n−1) + (−1)^n, !0 = 1.
pub fn subfactorial(n: u64) -> Result<Natural> {
    check("subfactorial", n, LINEAR_LIMIT)?;
    let mut d = BigInt::one();
    for k in 1..=n {
        d *= k;
        if k % 2 == 0 {
            d += 1;
        } else {
            d -= 1;
        }
    }
    to_natural("subfactorial", d)
}

/// !n = n!·Σ_{k≤n} (−1)^k/k!, summed in exact rationals.
pub fn subfactorial_series(n: u64) -> Result<Natural> {
    check("subfactorial_series", n, LINEAR_LIMIT)?;
    let mut sum = BigRational::zero();
    let mut inv_fact = BigRational::one();
    for k in 0..=n {
        if k > 0 {
            inv_fact /= BigInt::from(k);
        }
        if k % 2 == 0 {
            sum += &inv_fact;
        } else {
            sum -= &inv_fact;
        }
    }
    let value = sum * BigRational::from_integer(BigInt::from(factorial(n)));
    if !value.is_integer() {
        return Err(Error::inconsistency(
            "subfactorial_series",
            value,
            "an integer",
        ));
    }
    to_natural("subfactorial_series", value.to_integer())
}

/// Recurrence value, verified against the rational series.
pub fn subfactorial_checked(n: u64) -> Result<Natural> {
    let rec = subfactorial(n)?;
    let series = subfactorial_series(n)?;
    if rec != series {
        return Err(Error::inconsistency("subfactorial", rec, series));
    }
    Ok(rec)
}

/// B_k through the Bell triangle.
pub fn bell(k: u64) -> Result<Natural> {
    check("bell", k, TABLE_LIMIT)?;
    let mut row = vec![Natural::one()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("row never empty").clone());
        for v in &row {
            let add = next.last().expect("seeded") + v;
            next.push(add);
        }
        row = next;
    }
    Ok(row.swap_remove(0))
}

/// Rows 0..=n of the unsigned Stirling numbers of the first kind,
/// c(j+1, i) = c(j, i−1) + j·c(j, i).
pub fn stirling1_table(n: u64) -> Result<Vec<Vec<Natural>>> {
    check("stirling1", n, TABLE_LIMIT)?;
    let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(n as usize + 1);
    rows.push(vec![Natural::one()]);
    for j in 0..n {
        let prev = &rows[j as usize];
        let mut next = vec![Natural::zero(); j as usize + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            if i > 0 {
                *slot += &prev[i - 1];
            }
            if let Some(v) = prev.get(i) {
                *slot += v * j;
            }
        }
        rows.push(next);
    }
    Ok(rows)
}

/// |s(n, k)|, the unsigned Stirling number of the first kind.
///
/// The signed value differs only by (−1)^(n−k), so valuations agree.
pub fn stirling1(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(Error::domain("stirling1 requires k ≤ n"));
    }
    check("stirling1", n, TABLE_LIMIT)?;
    // one rolling row is enough for a single entry
    let mut row = vec![Natural::one()];
    for j in 0..n {
        let mut next = vec![Natural::zero(); j as usize + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            if i > 0 {
                *slot += &row[i - 1];
            }
            if let Some(v) = row.get(i) {
                *slot += v * j;
            }
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// a_n with a_0 = a_1 = a_2 = 1 and a_n = a_{n−1} + a_{n−3}.
pub fn narayana(n: u64) -> Result<Natural> {
    check("narayana", n, LINEAR_LIMIT)?;
    let (mut a, mut b, mut c) = (Natural::one(), Natural::one(), Natural::one());
    for _ in 3..=n {
        let next = &c + &a;
        a = core::mem::replace(&mut b, core::mem::replace(&mut c, next));
    }
    Ok(if n < 3 { Natural::one() } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn subfactorial_values() {
        let expect = [1u64, 0, 1, 2, 9, 44, 265, 1854, 14833, 133_496, 1_334_961];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(subfactorial(n as u64).unwrap(), nat(e), "!{n}");
            assert_eq!(
                subfactorial_series(n as u64).unwrap(),
                nat(e),
                "series !{n}"
            );
        }
    }

    #[test]
    fn subfactorial_checked_agrees() {
        for n in [0u64, 1, 17, 60, 123] {
            subfactorial_checked(n).unwrap();
        }
    }

    #[test]
    fn bell_values() {
        let expect = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(bell(k as u64).unwrap(), nat(e));
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling1(4, 2).unwrap(), nat(11));
        assert_eq!(stirling1(5, 1).unwrap(), nat(24));
        assert_eq!(stirling1(6, 2).unwrap(), nat(274));
        assert_eq!(stirling1(8, 4).unwrap(), nat(6769));
        for n in 0..20 {
            assert_eq!(stirling1(n, n).unwrap(), nat(1));
        }
        assert_eq!(stirling1(0, 0).unwrap(), nat(1));
        assert_eq!(stirling1(3, 0).unwrap(), nat(0));
        assert!(matches!(stirling1(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn stirling_table_matches_single_entries_and_row_sums() {
        let table = stirling1_table(12).unwrap();
        for n in 0..=12u64 {
            let sum: Natural = table[n as usize].iter().sum();
            assert_eq!(sum, factorial(n)); // Σ_k |s(n,k)| = n!
            for k in 0..=n {
                assert_eq!(table[n as usize][k as usize], stirling1(n, k).unwrap());
            }
        }
    }

    #[test]
    fn narayana_values() {
        let expect = [1u64, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(narayana(n as u64).unwrap(), nat(e));
        }
    }
}
