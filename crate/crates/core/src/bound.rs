//! Bound values: an exact rational plus rational multiples of base-p
//! logarithms, compared against integers without floating-point guesswork.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::interval::Interval;
use crate::{floor_log, Natural, Prime};

/// Largest power (in bits) built while deciding a comparison exactly.
const POWER_BUDGET_BITS: u64 = 1 << 20;

/// Refinement schedule for log brackets: log_b x is pinned to 2^-k.
const BRACKET_STEPS: [u32; 3] = [8, 12, 16];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Soundness {
    ProvedSound,
    AsPrinted,
}

impl Soundness {
    pub fn as_str(self) -> &'static str {
        match self {
            Soundness::ProvedSound => "proved-sound",
            Soundness::AsPrinted => "as-printed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Violated,
    Indeterminate,
    /// Report-only cases carry numbers but no pass/fail claim.
    Reported,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Indeterminate => "indeterminate",
            Verdict::Reported => "reported",
        }
    }

    /// `bound_vs_exact` is the ordering of the bound relative to the exact value.
    pub fn from_ordering(direction: Direction, bound_vs_exact: Option<Ordering>) -> Self {
        match (direction, bound_vs_exact) {
            (_, None) => Verdict::Indeterminate,
            (_, Some(Ordering::Equal)) => Verdict::Holds,
            (Direction::Lower, Some(Ordering::Less))
            | (Direction::Upper, Some(Ordering::Greater)) => Verdict::Holds,
            _ => Verdict::Violated,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// coefficient · log_base(argument), argument ≥ 2 and not a power of base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTerm {
    pub coefficient: BigRational,
    pub argument: Natural,
    pub base: Prime,
}

impl LogTerm {
    fn interval(&self) -> Interval {
        let ln_x = Interval::ln_biguint(&self.argument);
        let ln_b = Interval::from_u64(self.base.get()).ln();
        Interval::from_ratio(&self.coefficient) * (ln_x / ln_b)
    }

    /// Rational enclosure of the term with log_b x pinned to width 2^-k.
    fn bracket(&self, k: u32) -> Option<(BigRational, BigRational)> {
        if self.argument.bits().checked_shl(k)? > POWER_BUDGET_BITS {
            return None;
        }
        let powered = self.argument.pow(1u32 << k);
        let l = floor_log(&powered, self.base).ok()?;
        let scale = BigInt::one() << k;
        let lo = BigRational::new(BigInt::from(l), scale.clone());
        let hi = BigRational::new(BigInt::from(l) + 1, scale);
        let (a, b) = (&self.coefficient * &lo, &self.coefficient * &hi);
        Some(if a <= b { (a, b) } else { (b, a) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactBound {
    rational_part: BigRational,
    log_terms: Vec<LogTerm>,
    direction: Direction,
    soundness: Soundness,
    clamped: bool,
}

/// num/den in lowest terms.
///
/// Reduces the larger operand modulo the smaller before taking the gcd, which
/// keeps a factorial-sized numerator over a word-sized denominator linear.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    let (num, den) = (num.into(), den.into());
    assert!(!den.is_zero(), "zero denominator");
    let g = if num.is_zero() {
        den.abs()
    } else if num.bits() > den.bits() {
        (&num % &den).gcd(&den)
    } else {
        (&den % &num).gcd(&num)
    };
    let (mut num, mut den) = (num / &g, den / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    BigRational::new_raw(num, den)
}

pub fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

impl ExactBound {
    pub fn rational(value: BigRational, direction: Direction, soundness: Soundness) -> Self {
        ExactBound {
            rational_part: value,
            log_terms: Vec::new(),
            direction,
            soundness,
            clamped: false,
        }
    }

    pub fn integer(value: impl Into<BigInt>, direction: Direction, soundness: Soundness) -> Self {
        Self::rational(int(value), direction, soundness)
    }

    /// Adds coefficient · log_base(argument). Exact powers of the base fold
    /// into the rational part.
    pub fn with_log(mut self, coefficient: BigRational, argument: Natural, base: Prime) -> Self {
        assert!(!argument.is_zero(), "log of zero");
        if coefficient.is_zero() || argument.is_one() {
            return self;
        }
        let j = floor_log(&argument, base).expect("argument ≥ 1");
        if Natural::from(base.get()).pow(j as u32) == argument {
            self.rational_part += coefficient * int(j);
            return self;
        }
        self.log_terms.push(LogTerm {
            coefficient,
            argument,
            base,
        });
        self
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational_part
    }

    pub fn log_terms(&self) -> &[LogTerm] {
        &self.log_terms
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn soundness(&self) -> Soundness {
        self.soundness
    }

    pub fn is_clamped(&self) -> bool {
        self.clamped
    }

    /// The value when it has no logarithmic part.
    pub fn as_ratio(&self) -> Option<&BigRational> {
        self.log_terms.is_empty().then_some(&self.rational_part)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_ratio()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// max(0, self), recorded. Left alone when the sign can't be certified.
    pub fn clamp_at_zero(mut self) -> Self {
        if self.cmp_ratio(&BigRational::zero()) == Some(Ordering::Less) {
            self.rational_part = BigRational::zero();
            self.log_terms.clear();
            self.clamped = true;
        }
        self
    }

    pub fn interval(&self) -> Interval {
        let mut acc = Interval::from_ratio(&self.rational_part);
        for t in &self.log_terms {
            acc = acc + t.interval();
        }
        acc
    }

    pub fn cmp_int(&self, v: &BigInt) -> Option<Ordering> {
        self.cmp_ratio(&BigRational::from_integer(v.clone()))
    }

    /// Ordering of the bound's value relative to `v`; `None` only when no
    /// certified method within budget separates them.
    pub fn cmp_ratio(&self, v: &BigRational) -> Option<Ordering> {
        match self.log_terms.as_slice() {
            [] => return Some(self.rational_part.cmp(v)),
            [term] => {
                if let Some(ord) = cmp_single_log(term, &(v - &self.rational_part)) {
                    return Some(ord);
                }
            }
            _ => {}
        }
        if let Some(ord) = self.interval().cmp(&Interval::from_ratio(v)) {
            return Some(ord);
        }
        for k in BRACKET_STEPS {
            let mut lo = self.rational_part.clone();
            let mut hi = self.rational_part.clone();
            for t in &self.log_terms {
                let (a, b) = t.bracket(k)?;
                lo += a;
                hi += b;
            }
            if &hi < v {
                return Some(Ordering::Less);
            }
            if &lo > v {
                return Some(Ordering::Greater);
            }
        }
        None
    }

    pub fn verdict(&self, exact: &BigInt) -> Verdict {
        Verdict::from_ordering(self.direction, self.cmp_int(exact))
    }

    pub fn verdict_ratio(&self, exact: &BigRational) -> Verdict {
        Verdict::from_ordering(self.direction, self.cmp_ratio(exact))
    }
}

/// sign(c·log_b(x) − t), decided by comparing integer powers.
fn cmp_single_log(term: &LogTerm, t: &BigRational) -> Option<Ordering> {
    let c = &term.coefficient;
    let s = t / c;
    let ord = if !s.is_positive() {
        // log_b x > 0 ≥ s
        Ordering::Greater
    } else {
        let u = s.numer().to_u64()?;
        let w = s.denom().to_u64()?;
        cmp_power(&term.argument, w, &BigUint::from(term.base.get()), u)?
    };
    Some(if c.is_negative() { ord.reverse() } else { ord })
}

/// x^w vs b^u (x, b ≥ 2).
fn cmp_power(x: &BigUint, w: u64, b: &BigUint, u: u64) -> Option<Ordering> {
    let (xb, bb) = (x.bits() as u128, b.bits() as u128);
    let (x_lo, x_hi) = (w as u128 * (xb - 1) + 1, w as u128 * xb);
    let (b_lo, b_hi) = (u as u128 * (bb - 1) + 1, u as u128 * bb);
    if x_hi < b_lo {
        return Some(Ordering::Less);
    }
    if x_lo > b_hi {
        return Some(Ordering::Greater);
    }
    if x_hi > POWER_BUDGET_BITS as u128 || b_hi > POWER_BUDGET_BITS as u128 {
        return None;
    }
    Some(
        x.pow(u32::try_from(w).ok()?)
            .cmp(&b.pow(u32::try_from(u).ok()?)),
    )
}

impl fmt::Display for ExactBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rational_part;
        let mut wrote = false;
        if !r.is_zero() || self.log_terms.is_empty() {
            write!(f, "{r}")?;
            wrote = true;
        }
        for t in &self.log_terms {
            let c = &t.coefficient;
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "log_{}({})", t.base, t.argument)?;
            wrote = true;
        }
        Ok(())
    }
}

/// A lower and an upper bound for the same quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: ExactBound,
    pub upper: ExactBound,
}

impl BoundPair {
    pub fn check(&self, exact: &BigInt) -> (Verdict, Verdict) {
        (self.lower.verdict(exact), self.upper.verdict(exact))
    }

    pub fn brackets(&self, exact: &BigInt) -> bool {
        self.check(exact) == (Verdict::Holds, Verdict::Holds)
    }
}

fn factorial_big(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Rational enclosure lo < e < hi from the first `terms` series terms.
pub fn e_bracket(terms: u32) -> (BigRational, BigRational) {
    assert!(terms >= 2);
    let n = terms - 1;
    let nf = factorial_big(n);
    let mut num = BigInt::zero();
    for k in 0..=n {
        num += &nf / factorial_big(k);
    }
    let lo = BigRational::new(num, nf.clone());
    // tail Σ_{k>n} 1/k! < 1/(n!·n)
    let hi = &lo + BigRational::new(BigInt::one(), nf * n);
    (lo, hi)
}

/// Rational enclosure of 1/e from consecutive alternating partial sums.
pub fn inv_e_bracket(terms: u32) -> (BigRational, BigRational) {
    assert!(terms >= 2);
    let mut sum = BigRational::zero();
    let mut prev = BigRational::zero();
    let mut fact = BigInt::one();
    for k in 0..=terms {
        if k > 0 {
            fact *= k;
        }
        prev = sum.clone();
        let term = BigRational::new(BigInt::one(), fact.clone());
        if k.is_even() {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if prev < sum {
        (prev, sum)
    } else {
        (sum, prev)
    }
}

pub(crate) fn bigint(n: &Natural) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}
