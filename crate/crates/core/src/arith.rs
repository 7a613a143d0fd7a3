use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Prime, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(base: u64, mut exp: u128, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Largest power `p^t` that fits a `u64`, with its exponent.
pub(crate) fn word_power(p: u64) -> (u64, u32) {
    let mut pw = p;
    let mut t = 1;
    while let Some(next) = pw.checked_mul(p) {
        pw = next;
        t += 1;
    }
    (pw, t)
}

/// ν_p(x) for a machine word, `x ≥ 1`.
#[inline]
pub(crate) fn nu_u64(mut x: u64, p: u64) -> u64 {
    debug_assert!(x > 0);
    if p == 2 {
        return x.trailing_zeros() as u64;
    }
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

pub fn digit_sum_u64(mut n: u64, p: Prime) -> u64 {
    let p = p.get();
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// Sum of the base-`p` digits of `n`; `digit_sum(0, p) = 0`.
pub fn digit_sum(n: &Natural, p: Prime) -> Natural {
    if let Some(small) = n.to_u64() {
        return Natural::from(digit_sum_u64(small, p));
    }
    let (pw, t) = word_power(p.get());
    let pw_big = Natural::from(pw);
    let mut rest = n.clone();
    let mut total = Natural::zero();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&pw_big);
        let mut chunk = r.to_u64().expect("remainder below word power");
        let mut s = 0u64;
        for _ in 0..t {
            s += chunk % p.get();
            chunk /= p.get();
        }
        total += s;
        rest = q;
    }
    total
}

pub fn floor_log_u64(n: u64, p: Prime) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("floor_log of 0"));
    }
    let p = p.get() as u128;
    let n = n as u128;
    let mut j = 0;
    let mut pw = p;
    while pw <= n {
        pw *= p;
        j += 1;
    }
    Ok(j)
}

/// Largest `j` with `p^j ≤ n`, by integer powering only.
pub fn floor_log(n: &Natural, p: Prime) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::domain("floor_log of 0"));
    }
    if let Some(small) = n.to_u64() {
        return floor_log_u64(small, p);
    }
    // 2^(b_p - 1) ≤ p < 2^b_p and 2^(b_n - 1) ≤ n < 2^b_n bracket the answer.
    let bits_n = n.bits();
    let bits_p = 64 - p.get().leading_zeros() as u64;
    let mut lo = (bits_n - 1) / bits_p; // p^lo < 2^(bits_p·lo) ≤ 2^(bits_n-1) ≤ n
    let mut hi = bits_n.div_ceil(bits_p - 1).max(1); // p^hi ≥ 2^bits_n > n (p ≥ 2)
    let pb = Natural::from(p.get());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pb.pow(mid as u32) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// `n!` as a big integer.
pub(crate) fn factorial(n: u64) -> Natural {
    (2..=n).fold(Natural::one(), |acc, k| acc * k)
}

/// C(n, k) as a big integer; 0 when k > n.
pub(crate) fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
