use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::nu_u64;
use crate::bound::{bigint, int, ratio, BoundPair, Direction, ExactBound, Soundness};
use crate::bounds::sum_k_floor_log;
use crate::interval::Interval;
use crate::valuation::FFamily;
use crate::{check_limit, Error, Natural, Prime, Result, FACTORIAL_LOOP_LIMIT};

/// Bounds on ν_p of F1/F2/F3. `upper_sharp`, when present, never exceeds
/// `upper` and is the one paired with `lower`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FBounds {
    pub lower: ExactBound,
    pub upper: ExactBound,
    pub upper_sharp: Option<ExactBound>,
}

impl FBounds {
    pub fn pair(&self) -> BoundPair {
        BoundPair {
            lower: self.lower.clone(),
            upper: self
                .upper_sharp
                .clone()
                .unwrap_or_else(|| self.upper.clone()),
        }
    }
}

/// Walks n = 1, 2, … keeping every running sum the F-family bounds need, so a
/// scan over n costs one big-integer step per n.
#[derive(Clone, Debug)]
pub struct FRunner {
    p: Prime,
    n: u64,
    fact: Natural,
    nu_fact: u64,
    next_power: u64,
    floor_log: u64,
    exact_f1: Natural,
    exact_f2: Natural,
    exact_f3: Natural,
    /// Σ k!
    sum_fact: Natural,
    /// Σ k!·⌊log_p k⌋
    sum_fact_fl: Natural,
    /// Σ (k − (p−1)(⌊log_p k⌋ + 1))·k!
    f3_lower_num: BigInt,
    /// Σ k!·ln k, while k! fits a double
    f1_log: Interval,
}

/// Past this n the f64 sum Σ k!·ln k overflows.
pub const F1_LOG_FORM_LIMIT: u64 = 170;

impl FRunner {
    pub fn new(p: Prime) -> Self {
        FRunner {
            p,
            n: 0,
            fact: Natural::one(),
            nu_fact: 0,
            next_power: p.get(),
            floor_log: 0,
            exact_f1: Natural::zero(),
            exact_f2: Natural::zero(),
            exact_f3: Natural::zero(),
            sum_fact: Natural::zero(),
            sum_fact_fl: Natural::zero(),
            f3_lower_num: BigInt::zero(),
            f1_log: Interval::ZERO,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Advances to n + 1.
    pub fn step(&mut self) -> Result<()> {
        let k = self.n + 1;
        check_limit("f-family bounds", k, FACTORIAL_LOOP_LIMIT)?;
        let q = self.p.get();
        if k == self.next_power {
            self.floor_log += 1;
            self.next_power = self.next_power.saturating_mul(q);
        }
        self.fact *= k;
        let nu_k = nu_u64(k, q);
        self.nu_fact += nu_k;
        if nu_k > 0 {
            self.exact_f1 += &self.fact * nu_k;
        }
        self.exact_f2 += Natural::from(k as u128 * self.nu_fact as u128);
        if self.nu_fact > 0 {
            self.exact_f3 += &self.fact * self.nu_fact;
        }
        self.sum_fact += &self.fact;
        if self.floor_log > 0 {
            self.sum_fact_fl += &self.fact * self.floor_log;
        }
        let weight = BigInt::from(k) - BigInt::from((q - 1) as u128 * (self.floor_log + 1) as u128);
        self.f3_lower_num += weight * bigint(&self.fact);
        if k >= 2 {
            self.f1_log = if k <= F1_LOG_FORM_LIMIT {
                self.f1_log + Interval::from_biguint(&self.fact) * Interval::from_u64(k).ln()
            } else {
                Interval::entire()
            };
        }
        self.n = k;
        Ok(())
    }

    pub fn factorial(&self) -> &Natural {
        &self.fact
    }

    pub fn exact(&self, family: FFamily) -> Result<Natural> {
        Ok(match family {
            FFamily::F1 => self.exact_f1.clone(),
            FFamily::F2 => self.exact_f2.clone(),
            FFamily::F3 => self.exact_f3.clone(),
            FFamily::Ultra => &self.fact * self.nu_fact,
        })
    }

    pub fn bounds(&self, family: FFamily) -> Result<FBounds> {
        let n = self.n;
        let q1 = BigInt::from(self.p.get() - 1);
        let sound = Soundness::ProvedSound;
        let next_fact_minus_one = bigint(&self.fact) * (n + 1) - 1;
        Ok(match family {
            FFamily::F1 => FBounds {
                lower: ExactBound::integer(0, Direction::Lower, sound),
                upper: ExactBound::integer(next_fact_minus_one, Direction::Upper, sound),
                upper_sharp: Some(ExactBound::integer(
                    bigint(&self.sum_fact_fl),
                    Direction::Upper,
                    sound,
                )),
            },
            FFamily::F2 => {
                let nn = BigInt::from(n);
                let upper = ratio(&nn * (&nn * &nn - 1), 3 * &q1);
                let head = ratio(&nn * (&nn + 1) * (2 * &nn + 4 - 3 * (&q1 + 1)), 6 * &q1);
                let lower = head - int(bigint(&sum_k_floor_log(n, self.p)));
                FBounds {
                    lower: ExactBound::rational(lower, Direction::Lower, sound).clamp_at_zero(),
                    upper: ExactBound::rational(upper, Direction::Upper, sound),
                    upper_sharp: None,
                }
            }
            FFamily::F3 => {
                // Σ k!(k−1) = (n+1)! − 1 − Σ k!
                let sharp = &next_fact_minus_one - bigint(&self.sum_fact);
                FBounds {
                    lower: ExactBound::rational(
                        ratio(self.f3_lower_num.clone(), q1.clone()),
                        Direction::Lower,
                        sound,
                    )
                    .clamp_at_zero(),
                    upper: ExactBound::rational(
                        ratio(next_fact_minus_one, q1.clone()),
                        Direction::Upper,
                        sound,
                    ),
                    upper_sharp: Some(ExactBound::rational(
                        ratio(sharp, q1),
                        Direction::Upper,
                        sound,
                    )),
                }
            }
            FFamily::Ultra => {
                return Err(Error::domain("no bounds are stated for the ultrafactorial"))
            }
        })
    }

    /// Σ k!·ln k / ln p as a certified interval (infinite past the f64 range).
    pub fn f1_log_form(&self) -> Interval {
        if self.f1_log == Interval::ZERO {
            return Interval::ZERO;
        }
        self.f1_log / Interval::from_u64(self.p.get()).ln()
    }
}

/// F-family bounds at n, in one pass over k ≤ n.
pub fn f_val_bounds(family: FFamily, n: u64, p: Prime) -> Result<FBounds> {
    if family == FFamily::Ultra {
        return Err(Error::domain("no bounds are stated for the ultrafactorial"));
    }
    check_limit("f_val_bounds", n, FACTORIAL_LOOP_LIMIT)?;
    let mut runner = FRunner::new(p);
    for _ in 0..n {
        runner.step()?;
    }
    runner.bounds(family)
}
