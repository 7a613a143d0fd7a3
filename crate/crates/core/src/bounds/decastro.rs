use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::arith::binomial;
use crate::bound::{ratio, Direction, ExactBound, Soundness, Verdict};
use crate::interval::Interval;
use crate::oracle::binomial_mod_p;
use crate::valuation::nu_int;
use crate::{check_limit, floor_log_u64, Error, Natural, Prime, Result, Valuation};

/// Largest n for which the binomial-sum forms are evaluated.
pub const DECASTRO_LIMIT: u64 = 20_000;

/// Rounding tolerance for the complex form.
pub const COMPLEX_TOLERANCE: f64 = 1e-6;

fn check(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("needs n ≥ 1"));
    }
    check_limit("de Castro forms", n, DECASTRO_LIMIT)
}

/// ν_p(n) = p·Σ_{j=1}^{⌊log_p n⌋} frac(C(n, p^j)·p^{j−1}/n), in exact arithmetic.
pub fn decastro_val(n: u64, p: Prime) -> Result<Valuation> {
    check(n)?;
    let q = p.get();
    let l = floor_log_u64(n, p)?;
    // frac(a/n) = (a mod n)/n, so the sum is (Σ residues)/n
    let mut residues = Natural::zero();
    let mut pj = 1u64;
    for _ in 1..=l {
        let pj_prev = pj;
        pj *= q;
        residues += (binomial(n, pj) * pj_prev) % n;
    }
    let value = ratio(BigInt::from(residues) * q, BigInt::from(n));
    if !value.is_integer() {
        return Err(Error::inconsistency(
            "decastro_val integrality",
            value,
            "an integer",
        ));
    }
    let v = value.to_integer().to_u64().expect("small");
    let trial = nu_int(&Natural::from(n), p)?;
    if trial != v {
        return Err(Error::inconsistency("decastro_val", v, trial));
    }
    Ok(Valuation::from(v))
}

/// The exponential-sum form, in floating complex arithmetic with the
/// binomials reduced exactly mod p. Fails rather than round a value that
/// sits more than 1e-6 from an integer.
pub fn decastro_val_complex(n: u64, p: Prime) -> Result<Valuation> {
    let (v, residual) = decastro_complex_raw(n, p)?;
    if residual >= COMPLEX_TOLERANCE {
        return Err(Error::Precision {
            what: "decastro_val_complex",
            residual,
        });
    }
    Ok(Valuation::from(v))
}

/// Rounded value and its distance from the complex result.
pub fn decastro_complex_raw(n: u64, p: Prime) -> Result<(u64, f64)> {
    check(n)?;
    let q = p.get();
    let l = floor_log_u64(n, p)?;
    let theta = core::f64::consts::PI / q as f64;
    // i·e^{−iπ/p} / (2 sin(π/p)) = 1/2 + i·cot(π/p)/2
    let pre = (0.5, libm::cos(theta) / libm::sin(theta) / 2.0);
    let (mut re, mut im) = (l as f64, 0.0);
    let mut pj = 1u64;
    for _ in 1..=l {
        pj *= q;
        let c = binomial_mod_p(&Natural::from(n - 1), &Natural::from(pj - 1), p);
        let phase = 2.0 * theta * c as f64;
        re -= libm::cos(phase);
        im -= libm::sin(phase);
    }
    let z_re = pre.0 * re - pre.1 * im;
    let z_im = pre.0 * im + pre.1 * re;
    let rounded = libm::round(z_re);
    let residual = libm::hypot(z_re - rounded, z_im);
    if rounded < 0.0 {
        return Err(Error::Precision {
            what: "decastro_val_complex sign",
            residual: z_re,
        });
    }
    Ok((rounded as u64, residual))
}

/// The sums obtained from the exact form by dropping the fractional part.
#[derive(Clone, Debug)]
pub struct DeCastroPrinted {
    /// Σ (n/p^j)^{p^j}·p^j/n = Σ (n/p^j)^{p^j − 1}
    pub lower: ExactBound,
    /// ln Σ (e·n/p^j)^{p^j}·p^j/n; `None` for an empty sum
    pub upper_ln: Option<Interval>,
    /// ln Σ 2^{p^j}/√(πp^j/2)·(p^j/n)·exp(−(2/n)(p^j − n/2)² + 23/(18n))
    pub agievich_ln: Option<Interval>,
}

fn ln_verdict(bound_ln: Option<Interval>, exact: u64) -> Verdict {
    match bound_ln {
        // empty sum: the bound is 0
        None => Verdict::from_ordering(Direction::Upper, Some(0.cmp(&exact))),
        Some(_) if exact == 0 => Verdict::Holds,
        Some(b) => Verdict::from_ordering(Direction::Upper, b.cmp(&Interval::from_u64(exact).ln())),
    }
}

impl DeCastroPrinted {
    pub fn lower_verdict(&self, exact: u64) -> Verdict {
        self.lower.verdict(&BigInt::from(exact))
    }

    pub fn upper_verdict(&self, exact: u64) -> Verdict {
        ln_verdict(self.upper_ln, exact)
    }

    pub fn agievich_verdict(&self, exact: u64) -> Verdict {
        ln_verdict(self.agievich_ln, exact)
    }
}

pub fn decastro_printed_bounds(n: u64, p: Prime) -> Result<DeCastroPrinted> {
    check(n)?;
    let q = p.get();
    let l = floor_log_u64(n, p)?;
    let nn = Interval::from_u64(n);
    // Σ (n/p^j)^(p^j − 1); after cancelling gcd(n, p^j) every denominator is
    // a power of p, so the terms are summed over p^den_exp without any gcd.
    let mut lower_terms: Vec<(BigInt, u64)> = Vec::new();
    let mut upper_terms = Vec::new();
    let mut agievich_terms = Vec::new();
    let mut pj = 1u64;
    for _ in 1..=l {
        pj *= q;
        let e = u32::try_from(pj - 1).expect("p^j ≤ n");
        let g = n.gcd(&pj);
        let (num, den) = (n / g, pj / g);
        lower_terms.push((
            BigInt::from(num).pow(e),
            u64::from(e) * u64::from(den.ilog(q)),
        ));
        let qi = Interval::from_u64(pj);
        let ln_ratio = nn.ln() - qi.ln();
        upper_terms.push(qi * (Interval::ONE + ln_ratio) - ln_ratio);
        agievich_terms.push(agievich_term_ln(n, pj));
    }
    let top = lower_terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut num = BigInt::zero();
    for (t, k) in lower_terms {
        num += t * BigInt::from(q).pow(u32::try_from(top - k).expect("exponent fits"));
    }
    let mut den_exp = top;
    let big_q = BigInt::from(q);
    while den_exp > 0 && !num.is_zero() && (&num % &big_q).is_zero() {
        num /= &big_q;
        den_exp -= 1;
    }
    let den = BigInt::from(q).pow(u32::try_from(den_exp).expect("exponent fits"));
    let lower = BigRational::new_raw(num, den);
    let lse = |t: &[Interval]| (!t.is_empty()).then(|| Interval::log_sum_exp(t));
    Ok(DeCastroPrinted {
        lower: ExactBound::rational(lower, Direction::Lower, Soundness::AsPrinted),
        upper_ln: lse(&upper_terms),
        agievich_ln: lse(&agievich_terms),
    })
}

fn agievich_term_ln(n: u64, q: u64) -> Interval {
    let (nn, qi) = (Interval::from_u64(n), Interval::from_u64(q));
    let two = Interval::from_u64(2);
    let d = 2 * q as i128 - n as i128;
    let quad = Interval::from_ratio(&ratio(BigInt::from(d * d), BigInt::from(2 * n as u128)));
    let tail = Interval::from_ratio(&ratio(BigInt::from(23), BigInt::from(18 * n as u128)));
    qi * Interval::ln2() - (Interval::pi() * qi / two).ln() / two + qi.ln() - nn.ln() - quad + tail
}
