//! Power towers reduced modulo m, and the Berezin function n$ = n! ↑↑ n!.

use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factorial, pow_mod};
use crate::prime::totient;
use crate::valuation::factorial_val_u64;
use crate::{Error, Natural, Prime, Result, Valuation, FACTORIAL_LOOP_LIMIT};

/// Exponents at or above this are "large": a^e ≡ a^(e mod φ(m) + φ(m)) (mod m)
/// holds once e ≥ log₂ m, and m < 2^64.
const EULER_THRESHOLD: u64 = 64;

/// min(a ↑↑ h, cap) for a ≥ 1.
fn tower_capped(a: &Natural, h: &Natural, cap: u64) -> u64 {
    if h.is_zero() || a.is_one() {
        return 1.min(cap);
    }
    let a = match a.to_u64() {
        Some(v) if v < cap => v,
        _ => return cap,
    };
    // a ≥ 2 here; five levels of 2s already exceed any u64 cap.
    let height = h.to_u64().unwrap_or(u64::MAX).min(6);
    let mut value = a;
    for _ in 1..height {
        value = saturating_pow(a, value, cap);
        if value >= cap {
            return cap;
        }
    }
    value.min(cap)
}

fn saturating_pow(base: u64, exp: u64, cap: u64) -> u64 {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = match acc.checked_mul(base) {
            Some(v) if v < cap => v,
            _ => return cap,
        };
    }
    acc
}

fn tower_mod(a: &Natural, h: &Natural, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    if h.is_zero() {
        return 1;
    }
    let a_mod = (a % m).to_u64().expect("residue below modulus");
    if h.is_one() || a.is_one() {
        return a_mod;
    }
    let below = h - 1u32;
    let exp_cap = tower_capped(a, &below, EULER_THRESHOLD);
    if exp_cap < EULER_THRESHOLD {
        return pow_mod(a_mod, exp_cap as u128, m);
    }
    let phi = totient(m);
    let e = tower_mod(a, &below, phi);
    pow_mod(a_mod, e as u128 + phi as u128, m)
}

/// (a ↑↑ h) mod m, with a ↑↑ 0 = 1.
///
/// Recurses down the iterated-totient chain of `m`, so the depth is at most
/// min(h, chain length) regardless of how tall the tower is.
pub fn tetration_mod(a: &Natural, h: &Natural, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::domain("tetration modulus must be ≥ 1"));
    }
    if a.is_zero() {
        return Err(Error::domain("tetration base must be ≥ 1"));
    }
    Ok(tower_mod(a, h, m))
}

/// ν_p(n$) in symbolic form: (base ↑↑ height) × multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerValuation {
    pub base: Natural,
    pub height: Natural,
    pub multiplier: Valuation,
}

impl TowerValuation {
    pub fn zero() -> Self {
        TowerValuation {
            base: Natural::one(),
            height: Natural::zero(),
            multiplier: Valuation::zero(),
        }
    }

    /// A zero multiplier makes the whole valuation zero, whatever the height.
    pub fn is_zero(&self) -> bool {
        self.multiplier.is_zero()
    }

    /// The valuation as an integer when the tower is at most `max_bits` wide.
    pub fn exact(&self, max_bits: u64) -> Option<Natural> {
        if self.is_zero() {
            return Some(Natural::zero());
        }
        let height = self.height.to_u64()?;
        let mut value = Natural::one();
        for _ in 0..height {
            let exp = value.to_u64()?;
            let bits = (self.base.bits() as u128) * (exp as u128);
            if bits > max_bits as u128 {
                return None;
            }
            value = self.base.pow(u32::try_from(exp).ok()?);
        }
        Some(value * self.multiplier.value())
    }

    /// The valuation reduced mod `m`.
    pub fn residue(&self, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::domain("modulus must be ≥ 1"));
        }
        if self.is_zero() {
            return Ok(0);
        }
        let tower = tetration_mod(&self.base, &self.height, m)? as u128;
        let mult = (self.multiplier.value() % m).to_u64().expect("residue") as u128;
        Ok(((tower * mult) % m as u128) as u64)
    }
}

impl fmt::Display for TowerValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{base: {}, height: {}, multiplier: {}}}",
            self.base, self.height, self.multiplier
        )
    }
}

fn berezin_base(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::domain("Berezin function needs n ≥ 2"));
    }
    if n > FACTORIAL_LOOP_LIMIT {
        return Err(Error::resource("berezin", n, FACTORIAL_LOOP_LIMIT));
    }
    Ok(factorial(n))
}

/// ν_p(n$) = (n! ↑↑ (n! − 1)) · ν_p(n!).
pub fn berezin_val(n: u64, p: Prime) -> Result<TowerValuation> {
    let base = berezin_base(n)?;
    let multiplier = Valuation::from(factorial_val_u64(n, p)?);
    if multiplier.is_zero() {
        return Ok(TowerValuation::zero());
    }
    let height = &base - 1u32;
    Ok(TowerValuation {
        base,
        height,
        multiplier,
    })
}

/// ν_p(n$) mod m.
pub fn berezin_val_mod(n: u64, p: Prime, m: u64) -> Result<u64> {
    berezin_val(n, p)?.residue(m)
}

/// n$ mod m itself (its last digits when m is a power of the base).
pub fn berezin_mod(n: u64, m: u64) -> Result<u64> {
    let base = berezin_base(n)?;
    tetration_mod(&base, &base, m)
}
