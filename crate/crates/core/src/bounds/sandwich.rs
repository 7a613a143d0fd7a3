use num_traits::One;

use crate::arith::factorial;
use crate::bound::Verdict;
use crate::valuation::FFamily;
use crate::{check_limit, Error, Natural, Result};

/// Largest n for the F2 product sandwich, which builds F2(n) outright.
pub const F2_PRODUCT_LIMIT: u64 = 60;

/// Largest n for the F1/F3 product sandwiches.
pub const F13_PRODUCT_LIMIT: u64 = 300;

fn verdict(holds: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Violated
    }
}

/// n^{n/2} ≤ n! ≤ ((n+1)/2)^n given n!, as n^n ≤ (n!)² and 2^n·n! ≤ (n+1)^n.
pub fn factorial_sandwich_with(n: u64, fact: &Natural) -> Result<(Verdict, Verdict)> {
    if n == 0 {
        return Err(Error::domain("factorial sandwich needs n ≥ 1"));
    }
    let e = u32::try_from(n).map_err(|_| Error::resource("factorial sandwich", n, u32::MAX))?;
    let lower = Natural::from(n).pow(e) <= fact * fact;
    let upper = (fact << n as usize) <= Natural::from(n + 1).pow(e);
    Ok((verdict(lower), verdict(upper)))
}

pub fn factorial_sandwich(n: u64) -> Result<(Verdict, Verdict)> {
    check_limit("factorial sandwich", n, crate::FACTORIAL_LOOP_LIMIT)?;
    factorial_sandwich_with(n, &factorial(n))
}

pub fn factorial_sandwich_check(n: u64) -> Result<bool> {
    Ok(factorial_sandwich(n)? == (Verdict::Holds, Verdict::Holds))
}

/// The product sandwiches for F1, F2, F3 at n.
///
/// F2 is compared exactly after squaring: ∏k^{k²} ≤ F2² and
/// F2·2^{Σk²} ≤ ∏(k+1)^{k²}. The F1 and F3 bounds have irrational exponents;
/// both follow factor by factor from the factorial sandwich at each k
/// (k^{k/2} ≤ k! ≤ ((k+1)/2)^k, and for F3 also ln k! within the same
/// bounds), so the check is that sandwich, exact, for every k ≤ n.
pub fn f_product_bounds(family: FFamily, n: u64) -> Result<(Verdict, Verdict)> {
    if n == 0 {
        return Err(Error::domain("product sandwich needs n ≥ 1"));
    }
    match family {
        FFamily::F2 => {
            check_limit("F2 product sandwich", n, F2_PRODUCT_LIMIT)?;
            let mut f2 = Natural::one();
            let mut low = Natural::one();
            let mut high = Natural::one();
            let mut fact = Natural::one();
            let mut squares = 0u64;
            for k in 1..=n {
                fact *= k;
                let k2 = (k * k) as u32;
                f2 *= fact.pow(k as u32);
                low *= Natural::from(k).pow(k2);
                high *= Natural::from(k + 1).pow(k2);
                squares += k * k;
            }
            let lower = low <= &f2 * &f2;
            let upper = (f2 << squares as usize) <= high;
            Ok((verdict(lower), verdict(upper)))
        }
        FFamily::F1 | FFamily::F3 => {
            check_limit("F1/F3 product sandwich", n, F13_PRODUCT_LIMIT)?;
            let mut fact = Natural::one();
            let (mut lower, mut upper) = (true, true);
            for k in 1..=n {
                fact *= k;
                let (l, u) = factorial_sandwich_with(k, &fact)?;
                lower &= l == Verdict::Holds;
                upper &= u == Verdict::Holds;
            }
            Ok((verdict(lower), verdict(upper)))
        }
        FFamily::Ultra => Err(Error::domain("no product sandwich for the ultrafactorial")),
    }
}

pub fn f_product_bounds_check(family: FFamily, n: u64) -> Result<bool> {
    Ok(f_product_bounds(family, n)? == (Verdict::Holds, Verdict::Holds))
}
