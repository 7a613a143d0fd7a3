//! Brute-force ground truth: build the literal numbers, count divisions.
//!
//! Nothing here calls into the valuation formulas. Construction follows the
//! definitions as directly as possible and valuations come from repeated
//! exact division only.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{mul_mod, pow_mod, word_power};
use crate::valuation::{self, FFamily, HyperMethod};
use crate::{Error, Natural, Prime, Result, Valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Factorial,
    DoubleFactorial,
    Hyperfactorial,
    DoubleHyperfactorial,
    Superfactorial,
    F1,
    F2,
    F3,
    Ultrafactorial,
    Stirling,
    Catalan,
    Narayana,
    Subfactorial,
    Binomial,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Factorial,
        Family::DoubleFactorial,
        Family::Hyperfactorial,
        Family::DoubleHyperfactorial,
        Family::Superfactorial,
        Family::F1,
        Family::F2,
        Family::F3,
        Family::Ultrafactorial,
        Family::Stirling,
        Family::Catalan,
        Family::Narayana,
        Family::Subfactorial,
        Family::Binomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Factorial => "factorial",
            Family::DoubleFactorial => "double-factorial",
            Family::Hyperfactorial => "hyperfactorial",
            Family::DoubleHyperfactorial => "double-hyperfactorial",
            Family::Superfactorial => "superfactorial",
            Family::F1 => "f1",
            Family::F2 => "f2",
            Family::F3 => "f3",
            Family::Ultrafactorial => "ultrafactorial",
            Family::Stirling => "stirling",
            Family::Catalan => "catalan",
            Family::Narayana => "narayana",
            Family::Subfactorial => "subfactorial",
            Family::Binomial => "binomial",
        }
    }

    /// Largest n the oracle answers for.
    pub fn cap(self) -> u64 {
        match self {
            Family::F3 | Family::Ultrafactorial => 8,
            Family::Stirling => 60,
            Family::Catalan | Family::Binomial => 2000,
            Family::Narayana => 5000,
            Family::Subfactorial => 500,
            _ => 300,
        }
    }

    /// Largest n for which the whole number is materialized. Above it (F1,
    /// F2 only) the oracle works factor by factor.
    pub fn literal_cap(self) -> u64 {
        match self {
            Family::F1 => 8,
            Family::F2 => 60,
            f => f.cap(),
        }
    }

    /// Whether the family takes a second index k.
    pub fn takes_k(self) -> bool {
        matches!(self, Family::Stirling | Family::Binomial)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::domain(alloc::format!("unknown family '{s}'")))
    }
}

fn need_k(family: Family, n: u64, k: Option<u64>) -> Result<u64> {
    let k = k.ok_or_else(|| Error::domain(alloc::format!("{family} needs k")))?;
    if k > n {
        return Err(Error::domain(alloc::format!("{family} needs k ≤ n")));
    }
    Ok(k)
}

fn product(range: impl Iterator<Item = u64>) -> Natural {
    range.fold(Natural::one(), |acc, k| acc * k)
}

fn pow_big(base: &Natural, exp: &Natural) -> Result<Natural> {
    let e = exp
        .to_u32()
        .ok_or_else(|| Error::resource("oracle power", exp, u32::MAX))?;
    Ok(base.pow(e))
}

/// Coefficients of x(x+1)⋯(x+n−1); index k holds |s(n, k)|.
fn rising_factorial_coefficients(n: u64) -> Vec<Natural> {
    let mut poly = alloc::vec![Natural::one()];
    for i in 0..n {
        // multiply by (x + i)
        let mut next = alloc::vec![Natural::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] += c * i;
        }
        poly = next;
    }
    poly
}

/// a_0, …, a_n of a_n = a_{n−1} + a_{n−3}, a_0 = a_1 = a_2 = 1.
fn narayana_terms(n: u64) -> Vec<Natural> {
    let mut a: Vec<Natural> = alloc::vec![Natural::one(); 3];
    for i in 3..=n as usize {
        let next = &a[i - 1] + &a[i - 3];
        a.push(next);
    }
    a.truncate(n as usize + 1);
    a
}

/// The literal number for `family` at `n` (and `k` for Stirling/binomial).
pub fn build_number(family: Family, n: u64, k: Option<u64>) -> Result<Natural> {
    if n > family.literal_cap() {
        return Err(Error::resource(
            "build_number",
            alloc::format!("{family}({n})"),
            family.literal_cap(),
        ));
    }
    Ok(match family {
        Family::Factorial => product(1..=n),
        Family::DoubleFactorial => product((1..=n).rev().step_by(2)),
        Family::Hyperfactorial => (1..=n).fold(Natural::one(), |acc, k| {
            acc * Natural::from(k).pow(k as u32)
        }),
        Family::DoubleHyperfactorial => (1..=n).rev().step_by(2).fold(Natural::one(), |acc, k| {
            acc * Natural::from(k).pow(k as u32)
        }),
        Family::Superfactorial => (1..=n).fold(Natural::one(), |acc, k| acc * product(1..=k)),
        Family::F1 => {
            let mut acc = Natural::one();
            for k in 1..=n {
                acc *= pow_big(&Natural::from(k), &product(1..=k))?;
            }
            acc
        }
        Family::F2 => (1..=n).fold(Natural::one(), |acc, k| acc * product(1..=k).pow(k as u32)),
        Family::F3 => {
            let mut acc = Natural::one();
            for k in 1..=n {
                let f = product(1..=k);
                acc *= pow_big(&f, &f)?;
            }
            acc
        }
        Family::Ultrafactorial => {
            let f = product(1..=n);
            pow_big(&f, &f)?
        }
        Family::Stirling => {
            let k = need_k(family, n, k)?;
            rising_factorial_coefficients(n).swap_remove(k as usize)
        }
        Family::Catalan => {
            // C(2n, n) = ∏_{i=1}^{n} (n+i)/i, each prefix an integer
            let mut c = Natural::one();
            for i in 1..=n {
                c = c * (n + i) / i;
            }
            let (q, r) = c.div_rem(&Natural::from(n + 1));
            debug_assert!(r.is_zero());
            q
        }
        Family::Narayana => narayana_terms(n).swap_remove(n as usize),
        Family::Subfactorial => {
            // Σ_{j=0}^{n} (−1)^j n!/j!, with n!/j! built from the top down
            let mut sum = BigInt::zero();
            let mut term = BigInt::one();
            for j in (0..=n).rev() {
                if j % 2 == 0 {
                    sum += &term;
                } else {
                    sum -= &term;
                }
                term *= j.max(1);
            }
            sum.to_biguint().expect("derangement count is nonnegative")
        }
        Family::Binomial => {
            let k = need_k(family, n, k)?;
            product(1..=n) / (product(1..=k) * product(1..=n - k))
        }
    })
}

/// C(n, 0), …, C(n, n) by C(n, k+1) = C(n, k)·(n−k)/(k+1).
fn binomial_row(n: u64) -> Vec<Natural> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = Natural::one();
    for k in 0..=n {
        row.push(c.clone());
        c = c * (n - k) / (k + 1);
    }
    row
}

/// ν_p(x) by repeated exact division: word-sized chunks of p first, then p.
pub fn extract_val(x: &Natural, p: Prime) -> Result<Valuation> {
    if x.is_zero() {
        return Err(Error::domain("extract_val(0) is undefined"));
    }
    let q = p.get();
    let (chunk, t) = word_power(q);
    let mut x = x.clone();
    let mut v = 0u128;
    loop {
        let (d, r) = x.div_rem(&BigUint::from(chunk));
        if !r.is_zero() {
            break;
        }
        x = d;
        v += t as u128;
    }
    loop {
        let (d, r) = x.div_rem(&BigUint::from(q));
        if !r.is_zero() {
            break;
        }
        x = d;
        v += 1;
    }
    Ok(Valuation::from(v))
}

fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = mul_mod(num, (n - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    // n, k < p so den is a unit
    mul_mod(num, pow_mod(den, (p - 2) as u128, p), p)
}

/// C(n, k) mod p by Lucas' theorem; 0 when k > n.
pub fn binomial_mod_p(n: &Natural, k: &Natural, p: Prime) -> u64 {
    if k > n {
        return 0;
    }
    let q = p.get();
    let (mut n, mut k) = (n.clone(), k.clone());
    let mut acc = 1 % q;
    while !k.is_zero() {
        let (n_hi, n_lo) = n.div_rem(&BigUint::from(q));
        let (k_hi, k_lo) = k.div_rem(&BigUint::from(q));
        let (a, b) = (n_lo.to_u64().expect("digit"), k_lo.to_u64().expect("digit"));
        acc = mul_mod(acc, small_binomial_mod(a, b, q), q);
        if acc == 0 {
            return 0;
        }
        n = n_hi;
        k = k_hi;
    }
    acc
}

fn over_cap(family: Family, n: u64) -> Result<()> {
    if n > family.cap() {
        return Err(Error::resource(
            "oracle",
            alloc::format!("{family}({n})"),
            family.cap(),
        ));
    }
    Ok(())
}

/// Oracle valuation: literal construction, or factor-wise above the literal cap.
pub fn oracle_val(family: Family, n: u64, k: Option<u64>, p: Prime) -> Result<Valuation> {
    over_cap(family, n)?;
    if n <= family.literal_cap() {
        return extract_val(&build_number(family, n, k)?, p);
    }
    let mut total = Natural::zero();
    let mut fact = Natural::one();
    for j in 1..=n {
        fact *= j;
        let term = match family {
            // ν(∏ j^{j!}) = Σ j!·ν(j)
            Family::F1 => &fact * extract_val(&Natural::from(j), p)?.value(),
            // ν(∏ (j!)^j) = Σ j·ν(j!)
            Family::F2 => extract_val(&fact, p)?.into_inner() * j,
            _ => unreachable!("only F1/F2 have a factor-wise route"),
        };
        total += term;
    }
    Ok(Valuation::new(total))
}

fn binomial_core(n: u64, k: u64, p: Prime) -> Result<Valuation> {
    let top = valuation::factorial_val_u64(n, p)?;
    let bottom = valuation::factorial_val_u64(k, p)? + valuation::factorial_val_u64(n - k, p)?;
    Ok(Valuation::from(top - bottom))
}

/// The valuation-core answer for the same point.
pub fn core_val(family: Family, n: u64, k: Option<u64>, p: Prime) -> Result<Valuation> {
    let nn = Natural::from(n);
    match family {
        Family::Factorial => valuation::factorial_val(&nn, p),
        Family::DoubleFactorial => valuation::double_factorial_val(&nn, p),
        Family::Hyperfactorial => {
            let direct = valuation::hyperfactorial_val(n, p, HyperMethod::Direct)?;
            let rec = valuation::hyperfactorial_val(n, p, HyperMethod::Recurrence)?;
            if direct != rec {
                return Err(Error::inconsistency("hyperfactorial methods", direct, rec));
            }
            Ok(direct)
        }
        Family::DoubleHyperfactorial => valuation::double_hyperfactorial_val(n, p),
        Family::Superfactorial => Ok(valuation::superfactorial_val(&nn, p)),
        Family::F1 => valuation::f_val(FFamily::F1, n, p),
        Family::F2 => valuation::f_val(FFamily::F2, n, p),
        Family::F3 => valuation::f_val(FFamily::F3, n, p),
        Family::Ultrafactorial => valuation::f_val(FFamily::Ultra, n, p),
        Family::Stirling => valuation::stirling1_val(n, need_k(family, n, k)?, p),
        Family::Catalan => valuation::catalan_val(&nn, p),
        Family::Narayana => valuation::narayana_val(n, p),
        Family::Subfactorial => valuation::subfactorial_val(n, p),
        Family::Binomial => binomial_core(n, need_k(family, n, k)?, p),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub family: Family,
    pub n: u64,
    pub k: Option<u64>,
    pub p: u64,
    pub core: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}", self.family, self.n)?;
        if let Some(k) = self.k {
            write!(f, ", k={k}")?;
        }
        write!(
            f,
            ") p={}: core {} vs oracle {}",
            self.p, self.core, self.oracle
        )
    }
}

/// Compares valuation-core against the oracle on every point of the grid.
/// Errors from the core (including internal inconsistencies) are reported as
/// mismatches; an over-cap grid is an error.
pub fn oracle_check(
    families: &[Family],
    n_range: RangeInclusive<u64>,
    primes: &[Prime],
) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for &family in families {
        let (lo, hi) = (*n_range.start(), *n_range.end());
        over_cap(family, hi)?;
        let narayana = (family == Family::Narayana).then(|| narayana_terms(hi));
        for n in lo..=hi {
            let ks: Vec<Option<u64>> = if family.takes_k() {
                (0..=n).map(Some).collect()
            } else {
                alloc::vec![None]
            };
            let row = match family {
                Family::Stirling => Some(rising_factorial_coefficients(n)),
                Family::Binomial => Some(binomial_row(n)),
                _ => None,
            };
            let literal = match (&narayana, &row) {
                (Some(terms), _) => Some(terms[n as usize].clone()),
                _ if family.takes_k() || n > family.literal_cap() => None,
                _ => Some(build_number(family, n, None)?),
            };
            for k in ks {
                let number = match (&row, k) {
                    (Some(row), Some(k)) => Some(row[k as usize].clone()),
                    (None, Some(k)) => Some(build_number(family, n, Some(k))?),
                    _ => literal.clone(),
                };
                for &p in primes {
                    let oracle = match &number {
                        Some(x) if x.is_zero() => None,
                        Some(x) => Some(extract_val(x, p)?),
                        None => Some(oracle_val(family, n, k, p)?),
                    };
                    let core = core_val(family, n, k, p);
                    let agree = match (&core, &oracle) {
                        (Ok(c), Some(o)) => c == o,
                        // |s(n, 0)| = 0 for n ≥ 1: the valuation is undefined on both sides
                        (Err(Error::UndefinedValuation), None) => true,
                        _ => false,
                    };
                    if !agree {
                        out.push(Mismatch {
                            family,
                            n,
                            k,
                            p: p.get(),
                            core: match core {
                                Ok(v) => v.to_string(),
                                Err(e) => e.to_string(),
                            },
                            oracle: oracle
                                .map_or_else(|| "undefined".to_string(), |v| v.to_string()),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Test support: the Narayana term by the binomial-sum identity a_n = Σ_j C(n−2j, j).
pub fn narayana_by_binomials(n: u64) -> Natural {
    let mut total = Natural::zero();
    let mut j = 0;
    while 2 * j <= n && j <= n - 2 * j {
        let m = n - 2 * j;
        total += product(1..=m) / (product(1..=j) * product(1..=m - j));
        j += 1;
    }
    total
}

/// Test support: |!n − n!/e| < 1 pins !n; this checks the alternating sum sign.
pub fn subfactorial_is_nonnegative(n: u64) -> bool {
    build_number(Family::Subfactorial, n, None)
        .map(|v| !BigInt::from(v).is_negative())
        .unwrap_or(false)
}
