//! Exact p-adic valuations of the factorial family.
//!
//! Everything here works from the prime base and the index alone; the giant
//! numbers themselves are never built except where no formula applies
//! (Stirling, subfactorial and Narayana terms are small enough to expand).

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedSub, One, ToPrimitive, Zero};

use crate::arith::{factorial, mul_mod, nu_u64, pow_mod, word_power};
use crate::{check_limit, FACTORIAL_LOOP_LIMIT, ITERATIVE_LIMIT};
use crate::{digit_sum, digit_sum_u64, sequences, Error, Natural, Prime, Result};

/// ν_p of some quantity: an arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(Natural);

impl Valuation {
    pub fn zero() -> Self {
        Valuation(Natural::zero())
    }

    pub fn new(value: Natural) -> Self {
        Valuation(value)
    }

    pub fn value(&self) -> &Natural {
        &self.0
    }

    pub fn into_inner(self) -> Natural {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Self {
        Valuation(Natural::from(v))
    }
}

impl From<u128> for Valuation {
    fn from(v: u128) -> Self {
        Valuation(Natural::from(v))
    }
}

impl From<Natural> for Valuation {
    fn from(v: Natural) -> Self {
        Valuation(v)
    }
}

impl PartialEq<u64> for Valuation {
    fn eq(&self, other: &u64) -> bool {
        self.0 == Natural::from(*other)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Largest `k` with `p^k | x`, by repeated exact division.
pub fn nu_int(x: &Natural, p: Prime) -> Result<Valuation> {
    if x.is_zero() {
        return Err(Error::UndefinedValuation);
    }
    if let Some(small) = x.to_u64() {
        return Ok(Valuation::from(nu_u64(small, p.get())));
    }
    if p.get() == 2 {
        return Ok(Valuation::from(x.trailing_zeros().unwrap_or(0)));
    }
    let (pw, t) = word_power(p.get());
    let pw_big = Natural::from(pw);
    let mut rest = x.clone();
    let mut v = 0u64;
    loop {
        let (q, r) = rest.div_rem(&pw_big);
        if !r.is_zero() {
            let mut r = r.to_u64().unwrap_or(0);
            // rest = q·p^t + r with r ≠ 0, so ν_p(rest) = ν_p(r) < t.
            while r % p.get() == 0 {
                r /= p.get();
                v += 1;
            }
            return Ok(Valuation::from(v));
        }
        v += t as u64;
        rest = q;
    }
}

/// ν_p(n!) for a machine word: floor sum and digit-sum form, cross-checked.
pub fn factorial_val_u64(n: u64, p: Prime) -> Result<u64> {
    let floor_sum = legendre_sum_u64(n, p.get());
    let digit_form = (n - digit_sum_u64(n, p)) / (p.get() - 1);
    if floor_sum != digit_form {
        return Err(Error::inconsistency("factorial_val", floor_sum, digit_form));
    }
    Ok(floor_sum)
}

#[inline]
pub(crate) fn legendre_sum_u64(n: u64, p: u64) -> u64 {
    let mut q = n;
    let mut sum = 0;
    while q >= p {
        q /= p;
        sum += q;
    }
    sum
}

/// ν_p(n!) by Legendre's floor sum Σ⌊n/p^k⌋, checked against (n − s_p(n))/(p − 1).
///
/// O(log_p n) divisions; never builds the factorial.
pub fn factorial_val(n: &Natural, p: Prime) -> Result<Valuation> {
    if let Some(small) = n.to_u64() {
        return factorial_val_u64(small, p).map(Valuation::from);
    }
    let mut q = n.clone();
    let mut floor_sum = Natural::zero();
    while !q.is_zero() {
        q /= p.get();
        floor_sum += &q;
    }
    let (digit_form, rem) = (n - digit_sum(n, p)).div_rem(&Natural::from(p.get() - 1));
    if !rem.is_zero() || digit_form != floor_sum {
        return Err(Error::inconsistency("factorial_val", floor_sum, digit_form));
    }
    Ok(Valuation(floor_sum))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperMethod {
    /// Σ_{k≤n} k·ν_p(k).
    Direct,
    /// p⌊n/p⌋·ν_p(n!) − p·Σ_{k<⌊n/p⌋} ν_p((pk)!).
    Recurrence,
}

/// ν_p(H(n)) where H(n) = 1¹·2²⋯nⁿ.
pub fn hyperfactorial_val(n: u64, p: Prime, method: HyperMethod) -> Result<Valuation> {
    check_limit("hyperfactorial_val", n, ITERATIVE_LIMIT)?;
    let q = p.get();
    match method {
        HyperMethod::Direct => {
            let mut sum = 0u128;
            let mut k = q;
            while k <= n {
                sum += k as u128 * nu_u64(k, q) as u128;
                k += q;
            }
            Ok(Valuation::from(sum))
        }
        HyperMethod::Recurrence => {
            let m = n / q;
            let head = q as u128 * m as u128 * factorial_val_u64(n, p)? as u128;
            let mut tail = 0u128;
            for k in 1..m {
                tail += factorial_val_u64(q * k, p)? as u128;
            }
            let tail = q as u128 * tail;
            head.checked_sub(tail)
                .map(Valuation::from)
                .ok_or_else(|| Error::inconsistency("hyperfactorial recurrence sign", head, tail))
        }
    }
}

/// ν_p(sf(n)) = Σ_{k≤n} ν_p(k!), in O(log n) big-integer steps.
///
/// Uses Σ_{k=0}^{n} ⌊k/q⌋ = q·a(a−1)/2 + a(b+1) with n = aq + b, summed over q = p^j.
pub fn superfactorial_val(n: &Natural, p: Prime) -> Valuation {
    let mut total = Natural::zero();
    let mut q = Natural::from(p.get());
    while q <= *n {
        let (a, b) = n.div_rem(&q);
        let tri = &a * (&a - 1u32) / 2u32;
        total += &q * tri + &a * (b + 1u32);
        q *= p.get();
    }
    Valuation(total)
}

/// ν_p(n!!), `n!! = n(n−2)(n−4)⋯`.
///
/// Even n: n!! = 2^(n/2)·(n/2)!. Odd n: n!! = n!/((n−1)!!).
pub fn double_factorial_val(n: &Natural, p: Prime) -> Result<Valuation> {
    let two = p.get() == 2;
    if n.is_even() {
        let half = n >> 1u32;
        let mut v = factorial_val(&half, p)?.0;
        if two {
            v += half;
        }
        Ok(Valuation(v))
    } else {
        if two {
            return Ok(Valuation::zero());
        }
        let half = n >> 1u32; // (n−1)/2
        let whole = factorial_val(n, p)?.0;
        let lower = factorial_val(&half, p)?.0;
        whole
            .checked_sub(&lower)
            .map(Valuation)
            .ok_or_else(|| Error::inconsistency("double_factorial_val", "ν(n!)", "ν(((n−1)/2)!)"))
    }
}

/// ν_p(H2(n)) = Σ_{k ≡ n (mod 2), k ≤ n} k·ν_p(k), with H2(0) = H2(1) = 1.
pub fn double_hyperfactorial_val(n: u64, p: Prime) -> Result<Valuation> {
    check_limit("double_hyperfactorial_val", n, ITERATIVE_LIMIT)?;
    let q = p.get();
    let parity = n & 1;
    if q == 2 && parity == 1 {
        return Ok(Valuation::zero());
    }
    let mut sum = 0u128;
    let mut k = q;
    while k <= n {
        if k & 1 == parity {
            sum += k as u128 * nu_u64(k, q) as u128;
        }
        k += q;
    }
    Ok(Valuation::from(sum))
}

/// The iterated-factorial products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FFamily {
    /// ∏ k^(k!)
    F1,
    /// ∏ (k!)^k
    F2,
    /// ∏ (k!)^(k!)
    F3,
    /// (n!)^(n!)
    Ultra,
}

/// Exact valuation of F1/F2/F3/U at `n`. Grows like (n+1)! for F1 and F3.
pub fn f_val(family: FFamily, n: u64, p: Prime) -> Result<Valuation> {
    check_limit("f_val", n, FACTORIAL_LOOP_LIMIT)?;
    let q = p.get();
    if family == FFamily::Ultra {
        return Ok(Valuation(factorial(n) * factorial_val_u64(n, p)?));
    }
    let mut total = Natural::zero();
    let mut fact = Natural::one();
    let mut nu_fact = 0u64;
    for k in 1..=n {
        fact *= k;
        let nu_k = nu_u64(k, q);
        nu_fact += nu_k;
        match family {
            FFamily::F1 if nu_k > 0 => total += &fact * nu_k,
            FFamily::F2 => total += Natural::from(k as u128 * nu_fact as u128),
            FFamily::F3 if nu_fact > 0 => total += &fact * nu_fact,
            _ => {}
        }
    }
    Ok(Valuation(total))
}

/// ν_p(C_n) = ν_p((2n)!) − 2ν_p(n!) − ν_p(n+1).
///
/// For p = 2 the three digit-sum identities are evaluated as well and any
/// disagreement is an error.
pub fn catalan_val(n: &Natural, p: Prime) -> Result<Valuation> {
    let two_n: Natural = n << 1u32;
    let num = factorial_val(&two_n, p)?.0;
    let den = (factorial_val(n, p)?.0 << 1u32) + nu_int(&(n + 1u32), p)?.0;
    let v = num
        .checked_sub(&den)
        .ok_or_else(|| Error::inconsistency("catalan_val", "ν((2n)!)", "2ν(n!) + ν(n+1)"))?;
    if p.get() == 2 {
        let forms = catalan_val2_forms(n)?;
        for form in &forms {
            if *form != v {
                return Err(Error::inconsistency("catalan_val (p = 2 forms)", &v, form));
            }
        }
    }
    Ok(Valuation(v))
}

/// The binary identities s₂(n) − ν₂(n+1), n − ν₂((n+1)!), s₂(n+1) − 1.
pub fn catalan_val2_forms(n: &Natural) -> Result<[Natural; 3]> {
    let two = Prime::new(2).expect("2 is prime");
    let n1 = n + 1u32;
    let sub = |a: Natural, b: Natural| {
        a.checked_sub(&b)
            .ok_or_else(|| Error::inconsistency("catalan_val2_forms", "minuend", "subtrahend"))
    };
    Ok([
        sub(digit_sum(n, two), nu_int(&n1, two)?.0)?,
        sub(n.clone(), factorial_val(&n1, two)?.0)?,
        sub(digit_sum(&n1, two), Natural::one())?,
    ])
}

/// ν_p(|s(n, k)|) from the exact Stirling number.
pub fn stirling1_val(n: u64, k: u64, p: Prime) -> Result<Valuation> {
    nu_int(&sequences::stirling1(n, k)?, p)
}

/// ν_p(!n).
pub fn subfactorial_val(n: u64, p: Prime) -> Result<Valuation> {
    nu_int(&sequences::subfactorial(n)?, p)
}

/// ν_p(a_n) for the Narayana sequence.
pub fn narayana_val(n: u64, p: Prime) -> Result<Valuation> {
    nu_int(&sequences::narayana(n)?, p)
}

/// ν_3(a_n).
pub fn narayana_val3(n: u64) -> Result<Valuation> {
    narayana_val(n, Prime::new(3).expect("3 is prime"))
}

/// Both sides of sf(p−1) ≡ (−1)^((p−1)/2)·H(p−1) (mod p), reduced mod p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WilsonCheck {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

pub fn wilson_congruence(p: Prime) -> Result<WilsonCheck> {
    let q = p.get();
    if q == 2 {
        return Err(Error::domain("wilson_congruence needs an odd prime"));
    }
    let mut fact = 1u64;
    let mut sf = 1u64;
    let mut hyper = 1u64;
    for k in 1..q {
        fact = mul_mod(fact, k, q);
        sf = mul_mod(sf, fact, q);
        hyper = mul_mod(hyper, pow_mod(k, k as u128, q), q);
    }
    let rhs = if ((q - 1) / 2) % 2 == 0 {
        hyper
    } else {
        (q - hyper) % q
    };
    Ok(WilsonCheck {
        lhs: sf,
        rhs,
        holds: sf == rhs,
    })
}
