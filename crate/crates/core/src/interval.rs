//! Closed f64 intervals with outward rounding.
//!
//! Every operation returns an interval guaranteed to contain the exact real
//! result for any inputs inside the operands. IEEE add/sub/mul/div are
//! correctly rounded, so one ulp of widening suffices; libm transcendental
//! functions get a few ulps.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

const LIBM_ULPS: u32 = 4;

fn down(x: f64, ulps: u32) -> f64 {
    let mut v = x;
    for _ in 0..ulps {
        v = v.next_down();
    }
    v
}

fn up(x: f64, ulps: u32) -> f64 {
    let mut v = x;
    for _ in 0..ulps {
        v = v.next_up();
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(
            lo.partial_cmp(&hi) != Some(Ordering::Greater),
            "inverted interval [{lo}, {hi}]"
        );
        Interval { lo, hi }
    }

    /// An interval holding exactly the representable value `x`.
    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn entire() -> Self {
        Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        if self.lo.is_finite() && self.hi.is_finite() {
            self.lo / 2.0 + self.hi / 2.0
        } else if self.lo == self.hi {
            self.lo
        } else {
            f64::NAN
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    fn widen(lo: f64, hi: f64, ulps: u32) -> Self {
        Interval {
            lo: down(lo, ulps),
            hi: up(hi, ulps),
        }
    }

    pub fn from_u64(v: u64) -> Self {
        let f = v as f64;
        if f as u128 == v as u128 {
            Self::point(f)
        } else {
            Self::widen(f, f, 1)
        }
    }

    pub fn from_i64(v: i64) -> Self {
        let f = v as f64;
        if f as i128 == v as i128 {
            Self::point(f)
        } else {
            Self::widen(f, f, 1)
        }
    }

    /// Encloses `x`; overflows to an infinite upper end past f64 range.
    pub fn from_biguint(x: &BigUint) -> Self {
        if x.bits() <= 64 {
            return Self::from_u64(x.to_u64().expect("fits"));
        }
        let shift = x.bits() - 64;
        let top = (x >> shift).to_u64().expect("64 bits");
        // top ≤ x / 2^shift < top + 1
        let lo = Self::from_u64(top).lo;
        let hi = Self::from_u64(top.saturating_add(1)).hi.next_up();
        let scale = if shift > i32::MAX as u64 {
            i32::MAX
        } else {
            shift as i32
        };
        Interval {
            lo: scale_pow2(lo, scale, false),
            hi: scale_pow2(hi, scale, true),
        }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let mag = Self::from_biguint(x.magnitude());
        if x.sign() == Sign::Minus {
            -mag
        } else {
            mag
        }
    }

    pub fn from_ratio(x: &BigRational) -> Self {
        Self::from_bigint(x.numer()) / Self::from_bigint(x.denom())
    }

    /// ln x for x ≥ 1 without converting x to a float.
    pub fn ln_biguint(x: &BigUint) -> Self {
        assert!(!x.is_zero(), "ln of zero");
        if x.bits() <= 1000 {
            return Self::from_biguint(x).ln();
        }
        let shift = x.bits() - 64;
        let top = (x >> shift).to_u64().expect("64 bits");
        let t = Interval::new(
            Self::from_u64(top).lo,
            Self::from_u64(top.saturating_add(1)).hi.next_up(),
        );
        t.ln() + Self::ln2() * Self::from_u64(shift)
    }

    pub fn pi() -> Self {
        Self::widen(core::f64::consts::PI, core::f64::consts::PI, 1)
    }

    pub fn e() -> Self {
        Self::widen(core::f64::consts::E, core::f64::consts::E, 1)
    }

    pub fn ln2() -> Self {
        Self::widen(core::f64::consts::LN_2, core::f64::consts::LN_2, 1)
    }

    pub fn ln(self) -> Self {
        let lo = if self.lo <= 0.0 {
            f64::NEG_INFINITY
        } else {
            down(libm::log(self.lo), LIBM_ULPS)
        };
        let hi = if self.hi <= 0.0 {
            f64::NAN
        } else {
            up(libm::log(self.hi), LIBM_ULPS)
        };
        assert!(!hi.is_nan(), "ln of a non-positive interval");
        Interval { lo, hi }
    }

    pub fn exp(self) -> Self {
        let lo = down(libm::exp(self.lo), LIBM_ULPS).max(0.0);
        let hi = up(libm::exp(self.hi), LIBM_ULPS);
        Interval { lo, hi }
    }

    pub fn sqrt(self) -> Self {
        assert!(self.hi >= 0.0, "sqrt of a negative interval");
        let lo = if self.lo <= 0.0 {
            0.0
        } else {
            down(libm::sqrt(self.lo), 1)
        };
        Interval {
            lo,
            hi: up(libm::sqrt(self.hi), 1),
        }
    }

    pub fn sin(self) -> Self {
        // only used on narrow intervals inside (0, π/2]
        debug_assert!(self.lo > 0.0 && self.hi < 1.6);
        Interval {
            lo: down(libm::sin(self.lo), LIBM_ULPS),
            hi: up(libm::sin(self.hi), LIBM_ULPS),
        }
    }

    pub fn sqr(self) -> Self {
        if self.lo >= 0.0 {
            self * self
        } else if self.hi <= 0.0 {
            (-self) * (-self)
        } else {
            let m = self.lo.abs().max(self.hi);
            Interval {
                lo: 0.0,
                hi: up(m * m, 1),
            }
        }
    }

    pub fn max(self, other: Self) -> Self {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Certified ordering: `Some` only when every point of `self` compares
    /// the same way with every point of `other`.
    #[allow(clippy::should_implement_trait)]
    pub fn cmp(&self, other: &Interval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// ln(Σ exp(aᵢ)) for intervals aᵢ.
    pub fn log_sum_exp(terms: &[Interval]) -> Self {
        assert!(!terms.is_empty(), "empty log-sum-exp");
        let shift = terms.iter().map(|t| t.hi).fold(f64::NEG_INFINITY, f64::max);
        let mut acc = Interval::ZERO;
        for t in terms {
            acc = acc + (*t - Interval::point(shift)).exp();
        }
        acc.ln() + Interval::point(shift)
    }
}

fn scale_pow2(x: f64, exp: i32, round_up: bool) -> f64 {
    let v = libm::ldexp(x, exp);
    if v.is_infinite() && !round_up {
        f64::MAX
    } else {
        v
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Self) -> Self {
        Interval::widen(self.lo + rhs.lo, self.hi + rhs.hi, 1)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Self) -> Self {
        Interval::widen(self.lo - rhs.hi, self.hi - rhs.lo, 1)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Self {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

fn nan_to(x: f64, fallback: f64) -> f64 {
    if x.is_nan() {
        fallback
    } else {
        x
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Self) -> Self {
        let c = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        // 0·∞ products only arise from exact zeros, whose true product is 0
        let lo = c
            .iter()
            .map(|v| nan_to(*v, 0.0))
            .fold(f64::INFINITY, f64::min);
        let hi = c
            .iter()
            .map(|v| nan_to(*v, 0.0))
            .fold(f64::NEG_INFINITY, f64::max);
        Interval::widen(lo, hi, 1)
    }
}

impl core::ops::Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Self) -> Self {
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Interval::entire();
        }
        let inv = Interval::widen(1.0 / rhs.hi, 1.0 / rhs.lo, 1);
        self * inv
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}
