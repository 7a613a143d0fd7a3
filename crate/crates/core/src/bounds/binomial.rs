use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::arith::binomial;
use crate::bound::{bigint, Direction, ExactBound, Soundness, Verdict};
use crate::interval::Interval;
use crate::{Error, Natural, Result};

/// The binomial sandwiches at one (n, k), each checked against C(n, k).
#[derive(Clone, Debug)]
pub struct BinomialReport {
    pub n: u64,
    pub k: u64,
    pub exact: Natural,
    /// (n/k)^k ≤ C(n, k)
    pub wk_lower: ExactBound,
    /// ln of (e·n/k)^k
    pub wk_upper_ln: Interval,
    /// ln of 2^n/√(πn/2)·exp(−(2/n)(k−n/2)² + 23/(18n))
    pub agievich_ln: Interval,
    /// n^k/k! − 1, claimed as an upper bound
    pub printed_minus_one: ExactBound,
    pub exact_ln: Interval,
}

impl BinomialReport {
    pub fn wk_lower_verdict(&self) -> Verdict {
        self.wk_lower.verdict(&bigint(&self.exact))
    }

    pub fn wk_upper_verdict(&self) -> Verdict {
        Verdict::from_ordering(Direction::Upper, self.wk_upper_ln.cmp(&self.exact_ln))
    }

    pub fn agievich_verdict(&self) -> Verdict {
        Verdict::from_ordering(Direction::Upper, self.agievich_ln.cmp(&self.exact_ln))
    }

    pub fn printed_verdict(&self) -> Verdict {
        self.printed_minus_one.verdict(&bigint(&self.exact))
    }
}

/// ln of the Agievich bound on C(n, k).
pub fn agievich_ln(n: u64, k: u64) -> Interval {
    let nn = Interval::from_u64(n);
    let half_log = (Interval::pi() * nn / Interval::from_u64(2)).ln() / Interval::from_u64(2);
    let d = 2 * k as i128 - n as i128;
    // (2/n)(k − n/2)² = (2k − n)²/(2n)
    let quad = Interval::from_ratio(&BigRational::new(
        BigInt::from(d * d),
        BigInt::from(2 * n as u128),
    ));
    let tail = Interval::from_ratio(&BigRational::new(
        BigInt::from(23),
        BigInt::from(18 * n as u128),
    ));
    nn * Interval::ln2() - half_log - quad + tail
}

pub fn binomial_bounds(n: u64, k: u64) -> Result<BinomialReport> {
    if k == 0 || k > n {
        return Err(Error::domain("binomial bounds need 1 ≤ k ≤ n"));
    }
    let exact = binomial(n, k);
    let kk = u32::try_from(k).map_err(|_| Error::resource("binomial_bounds", k, u32::MAX))?;
    let nk = BigInt::from(n).pow(kk);
    // (n/g)^k / (k/g)^k is already in lowest terms
    let g = n.gcd(&k);
    let wk_lower = ExactBound::rational(
        BigRational::new_raw(BigInt::from(n / g).pow(kk), BigInt::from(k / g).pow(kk)),
        Direction::Lower,
        Soundness::ProvedSound,
    );
    let (nn, ki) = (Interval::from_u64(n), Interval::from_u64(k));
    let wk_upper_ln = ki * (Interval::ONE + nn.ln() - ki.ln());
    let k_fact: BigInt = (1..=k).fold(BigInt::from(1), |a, i| a * i);
    let printed_minus_one = ExactBound::rational(
        // left unreduced: the gcd of n^k and k! costs more than the comparison
        BigRational::new_raw(nk - &k_fact, k_fact),
        Direction::Upper,
        Soundness::AsPrinted,
    );
    let exact_ln = Interval::ln_biguint(&exact);
    Ok(BinomialReport {
        n,
        k,
        exact,
        wk_lower,
        wk_upper_ln,
        agievich_ln: agievich_ln(n, k),
        printed_minus_one,
        exact_ln,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = binomial_bounds(4, 2).unwrap();
        assert_eq!(r.exact, Natural::from(6u32));
        assert_eq!(r.wk_lower.as_integer(), Some(BigInt::from(4)));
        let w = r.wk_upper_ln.exp();
        assert!(w.lo() > 29.5562 && w.hi() < 29.5563, "{w}");
        assert_eq!(r.wk_lower_verdict(), Verdict::Holds);
        assert_eq!(r.wk_upper_verdict(), Verdict::Holds);
        assert_eq!(r.agievich_verdict(), Verdict::Holds);

        let r = binomial_bounds(10, 5).unwrap();
        let a = r.agievich_ln.exp();
        assert!(a.lo() > 293.5 && a.hi() < 293.7, "{a}");
        assert_eq!(r.agievich_verdict(), Verdict::Holds);

        let r = binomial_bounds(4, 1).unwrap();
        assert_eq!(r.printed_minus_one.as_integer(), Some(BigInt::from(3)));
        assert_eq!(r.printed_verdict(), Verdict::Violated);

        assert!(binomial_bounds(4, 0).is_err());
        assert!(binomial_bounds(4, 5).is_err());
    }

    #[test]
    fn sound_sandwiches_hold_on_a_grid() {
        for n in 1..=120u64 {
            for k in 1..=n {
                let r = binomial_bounds(n, k).unwrap();
                assert_eq!(r.wk_lower_verdict(), Verdict::Holds, "({n},{k})");
                assert_eq!(r.wk_upper_verdict(), Verdict::Holds, "({n},{k})");
                assert_eq!(r.agievich_verdict(), Verdict::Holds, "({n},{k})");
            }
        }
    }
}
