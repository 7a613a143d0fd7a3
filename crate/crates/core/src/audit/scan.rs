use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::record::{sort_records, AuditRecord, Value};
use super::registry::{select, FCase, Grid, InequalityCase, Kind, Relation};
use crate::arith::{factorial, nu_u64};
use crate::bound::{bigint, int, inv_e_bracket, ratio, Direction, ExactBound, Soundness, Verdict};
use crate::bounds::{
    binomial_bounds, catalan_val_bounds, decastro_printed_bounds, f_product_bounds,
    factorial_sandwich_with, factorial_val_bounds, factorial_val_upper_crude,
    hyperfactorial_composed, hyperfactorial_printed, narayana_chain, stirling_normalized,
    stirling_val_bounds, stirling_val_lower_general, superfactorial_val_upper, FRunner,
};
use crate::interval::Interval;
use crate::prime::is_prime;
use crate::stirling::stirling_decompose;
use crate::valuation::{
    catalan_val, factorial_val_u64, hyperfactorial_val, nu_int, superfactorial_val,
    wilson_congruence, FFamily, HyperMethod,
};
use crate::{sequences, Error, Natural, Prime, Result};

/// n-values per shard for cases evaluated point by point.
const CHUNK: u64 = 128;

/// A contiguous run of one case at one prime. Shards are independent; their
/// records merge into the same order whatever the schedule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub case: &'static InequalityCase,
    pub p: Option<Prime>,
    pub n_lo: u64,
    pub n_hi: u64,
}

#[derive(Clone, Debug)]
pub struct ScanPlan {
    pub cases: Vec<&'static InequalityCase>,
    pub n_max: u64,
    pub primes: Vec<Prime>,
}

/// Resolves case names and checks the grid against each case's cap. Cases
/// picked by `all` are clamped to their caps instead.
pub fn plan<S: AsRef<str>>(names: &[S], n_max: u64, primes: &[Prime]) -> Result<ScanPlan> {
    let (cases, clamp) = select(names)?;
    if !clamp {
        if let Some(c) = cases.iter().find(|c| n_max > c.cap) {
            return Err(Error::resource(
                "audit scan",
                alloc::format!("{} to n = {n_max}", c.id),
                c.cap,
            ));
        }
    }
    Ok(ScanPlan {
        cases,
        n_max,
        primes: primes.to_vec(),
    })
}

fn is_stateful(kind: Kind) -> bool {
    matches!(
        kind,
        Kind::F(_)
            | Kind::Nara(_)
            | Kind::StirlingNormalized(_)
            | Kind::StirlingGeneral
            | Kind::NarayanaUpper
            | Kind::NarayanaDelta
            | Kind::NarayanaMLower
            | Kind::Wilson
    )
}

impl ScanPlan {
    pub fn shards(&self) -> Vec<Shard> {
        let mut out = Vec::new();
        for &case in &self.cases {
            let (lo, hi) = (case.n_min, self.n_max.min(case.cap));
            if lo > hi {
                continue;
            }
            let primes: Vec<Option<Prime>> = match case.grid {
                Grid::PerPrime => self.primes.iter().copied().map(Some).collect(),
                Grid::Three => alloc::vec![Some(Prime::new(3).expect("3 is prime"))],
                Grid::PrimeFree | Grid::OddPrimes => alloc::vec![None],
            };
            for p in primes {
                if is_stateful(case.kind) {
                    out.push(Shard {
                        case,
                        p,
                        n_lo: lo,
                        n_hi: hi,
                    });
                    continue;
                }
                let mut a = lo;
                while a <= hi {
                    let b = hi.min(a.saturating_add(CHUNK - 1));
                    out.push(Shard {
                        case,
                        p,
                        n_lo: a,
                        n_hi: b,
                    });
                    a = b + 1;
                }
            }
        }
        out
    }
}

/// Concatenates shard outputs into the canonical (case_id, p, n, k) order.
pub fn merge(parts: impl IntoIterator<Item = Vec<AuditRecord>>) -> Vec<AuditRecord> {
    let mut all: Vec<AuditRecord> = parts.into_iter().flatten().collect();
    sort_records(&mut all);
    all
}

/// Single-threaded scan.
pub fn scan<S: AsRef<str>>(names: &[S], n_max: u64, primes: &[Prime]) -> Result<Vec<AuditRecord>> {
    let plan = plan(names, n_max, primes)?;
    let mut parts = Vec::new();
    for shard in plan.shards() {
        parts.push(run_shard(&shard)?);
    }
    Ok(merge(parts))
}

fn pick(d: Direction, lower: ExactBound, upper: ExactBound) -> ExactBound {
    match d {
        Direction::Lower => lower,
        Direction::Upper => upper,
    }
}

fn pick_verdict(d: Direction, v: (Verdict, Verdict)) -> Verdict {
    match d {
        Direction::Lower => v.0,
        Direction::Upper => v.1,
    }
}

fn against(rec: AuditRecord, exact: &BigInt, bound: &ExactBound) -> AuditRecord {
    rec.values(
        Value::int(exact.clone()),
        Value::bound(bound),
        bound.verdict(exact),
    )
}

fn upper_ln(rec: AuditRecord, exact: &Natural, bound_ln: Interval) -> AuditRecord {
    let verdict =
        Verdict::from_ordering(Direction::Upper, bound_ln.cmp(&Interval::ln_biguint(exact)));
    rec.values(Value::int(bigint(exact)), Value::LnReal(bound_ln), verdict)
}

/// Evaluates one shard.
pub fn run_shard(shard: &Shard) -> Result<Vec<AuditRecord>> {
    let case = shard.case;
    let pv = shard.p.map(Prime::get);
    let rec = |n: u64| AuditRecord::new(case.id, case.soundness, pv, n);
    let prime = || shard.p.ok_or_else(|| Error::domain("case needs a prime"));
    let range = shard.n_lo..=shard.n_hi;
    let mut out = Vec::new();
    match case.kind {
        Kind::Majo1 | Kind::Mainineq(_) => {
            let p = prime()?;
            for n in range {
                let exact = BigInt::from(factorial_val_u64(n, p)?);
                let bound = match case.kind {
                    Kind::Mainineq(d) => {
                        let pair = factorial_val_bounds(&Natural::from(n), p)?;
                        pick(d, pair.lower, pair.upper)
                    }
                    _ => factorial_val_upper_crude(&Natural::from(n), p),
                };
                out.push(against(rec(n), &exact, &bound));
            }
        }
        Kind::HyperComposed(_) | Kind::HyperPrinted(_) => {
            let p = prime()?;
            for n in range {
                let exact = hyperfactorial_val(n, p, HyperMethod::Recurrence)?.to_bigint();
                let bound = match case.kind {
                    Kind::HyperComposed(d) => {
                        let pair = hyperfactorial_composed(n, p)?;
                        pick(d, pair.lower, pair.upper)
                    }
                    Kind::HyperPrinted(v) => hyperfactorial_printed(n, p, v)?,
                    _ => unreachable!(),
                };
                out.push(against(rec(n), &exact, &bound));
            }
        }
        Kind::SfUpper => {
            let p = prime()?;
            for n in range {
                let nn = Natural::from(n);
                let exact = superfactorial_val(&nn, p).to_bigint();
                out.push(against(rec(n), &exact, &superfactorial_val_upper(&nn, p)));
            }
        }
        Kind::F(fc) => {
            let p = prime()?;
            let mut runner = FRunner::new(p);
            let mut log_form = ExactBound::integer(0, Direction::Upper, Soundness::AsPrinted);
            while runner.n() < shard.n_hi {
                runner.step()?;
                let n = runner.n();
                if fc == FCase::F1PrintedLog && n >= 2 {
                    log_form =
                        log_form.with_log(int(bigint(runner.factorial())), Natural::from(n), p);
                }
                if n < shard.n_lo {
                    continue;
                }
                let family = match fc {
                    FCase::F1Factorial | FCase::F1FloorLog | FCase::F1PrintedLog => FFamily::F1,
                    FCase::F2Upper | FCase::F2Lower => FFamily::F2,
                    FCase::F3Factorial | FCase::F3Sum | FCase::F3Lower => FFamily::F3,
                };
                let exact = bigint(&runner.exact(family)?);
                let b = runner.bounds(family)?;
                let bound = match fc {
                    FCase::F1Factorial | FCase::F2Upper | FCase::F3Factorial => b.upper,
                    FCase::F1FloorLog | FCase::F3Sum => b.upper_sharp.expect("sharp upper"),
                    FCase::F2Lower | FCase::F3Lower => b.lower,
                    FCase::F1PrintedLog => log_form.clone(),
                };
                out.push(against(rec(n), &exact, &bound));
            }
        }
        Kind::FactorialSandwich(d) => {
            let mut fact = factorial(shard.n_lo - 1);
            for n in range {
                fact *= n;
                out.push(rec(n).values(
                    Value::Empty,
                    Value::Empty,
                    pick_verdict(d, factorial_sandwich_with(n, &fact)?),
                ));
            }
        }
        Kind::Product(family, d) => {
            for n in range {
                out.push(rec(n).values(
                    Value::Empty,
                    Value::Empty,
                    pick_verdict(d, f_product_bounds(family, n)?),
                ));
            }
        }
        Kind::Wk(_) | Kind::Agievich | Kind::BinomialPrinted => {
            for n in range {
                for k in 1..=n {
                    let r = binomial_bounds(n, k)?;
                    let at = rec(n).with_k(k);
                    out.push(match case.kind {
                        Kind::Wk(Direction::Lower) => against(at, &bigint(&r.exact), &r.wk_lower),
                        Kind::Wk(Direction::Upper) => upper_ln(at, &r.exact, r.wk_upper_ln),
                        Kind::Agievich => upper_ln(at, &r.exact, r.agievich_ln),
                        _ => against(at, &bigint(&r.exact), &r.printed_minus_one),
                    });
                }
            }
        }
        Kind::DeCastroLower | Kind::DeCastroUpper | Kind::DeCastroAgievich => {
            let p = prime()?;
            for n in range {
                let exact = nu_u64(n, p.get());
                let b = decastro_printed_bounds(n, p)?;
                let (rhs, verdict) = match case.kind {
                    Kind::DeCastroLower => (Value::bound(&b.lower), b.lower_verdict(exact)),
                    Kind::DeCastroUpper => (
                        b.upper_ln.map_or(Value::int(0), Value::LnReal),
                        b.upper_verdict(exact),
                    ),
                    _ => (
                        b.agievich_ln.map_or(Value::int(0), Value::LnReal),
                        b.agievich_verdict(exact),
                    ),
                };
                out.push(rec(n).values(Value::int(exact), rhs, verdict));
            }
        }
        Kind::Nara(_) | Kind::StirlingNormalized(_) | Kind::StirlingGeneral => {
            let p = prime()?;
            let table = sequences::stirling1_table(shard.n_hi + 1)?;
            for n in range {
                for k in 1..=n {
                    let exact = nu_int(&table[n as usize + 1][k as usize + 1], p)?;
                    let dec = stirling_decompose(n, k, p)?;
                    let mut at = rec(n).with_k(k);
                    if let Some(d) = dec {
                        at.r = Some(d.r);
                        at.m = Some(d.m);
                    }
                    match case.kind {
                        Kind::Nara(side) => {
                            let Some(d) = dec else { continue };
                            let Some(pair) = stirling_val_bounds(&d)? else {
                                continue;
                            };
                            out.push(against(
                                at,
                                &exact.to_bigint(),
                                &pick(side, pair.lower, pair.upper),
                            ));
                        }
                        Kind::StirlingNormalized(side) => {
                            if dec.is_none() || k >= n {
                                continue;
                            }
                            let v = exact.to_u64().expect("small");
                            let ns = stirling_normalized(n, k, p, v)?;
                            let bound = pick(side, ns.bounds.lower, ns.bounds.upper);
                            let verdict = bound.verdict_ratio(&ns.middle);
                            out.push(at.values(
                                Value::ratio(ns.middle),
                                Value::bound(&bound),
                                verdict,
                            ));
                        }
                        _ => {
                            let bound = stirling_val_lower_general(n, k, p)?;
                            out.push(against(at, &exact.to_bigint(), &bound));
                        }
                    }
                }
            }
        }
        Kind::Catalan(variant, d) => {
            let p = prime()?;
            for n in range {
                let nn = Natural::from(n);
                let exact = catalan_val(&nn, p)?.to_bigint();
                let pair = catalan_val_bounds(&nn, p, variant)?;
                out.push(against(rec(n), &exact, &pick(d, pair.lower, pair.upper)));
            }
        }
        Kind::NarayanaUpper | Kind::NarayanaDelta | Kind::NarayanaMLower => {
            let three = prime()?;
            // a_{n−2}, a_{n−1}, a_n with a_0 = a_1 = a_2 = 1
            let mut window = [Natural::one(), Natural::one(), Natural::one()];
            for n in 3..=shard.n_hi {
                let next = &window[2] + &window[0];
                window = [window[1].clone(), window[2].clone(), next];
                if n < shard.n_lo {
                    continue;
                }
                let exact = nu_int(&window[2], three)?.to_u64().expect("small");
                let chain = narayana_chain(n, exact)?;
                out.push(match case.kind {
                    Kind::NarayanaUpper => rec(n).values(
                        Value::int(exact),
                        Value::int(chain.middle),
                        chain.upper_verdict(),
                    ),
                    Kind::NarayanaDelta => rec(n).values(
                        Value::int(chain.middle),
                        Value::int(chain.top),
                        chain.delta_verdict(),
                    ),
                    _ => against(rec(n), &BigInt::from(exact), &chain.m_lower),
                });
            }
            for n in shard.n_lo..=shard.n_hi.min(2) {
                // a_1 = a_2 = 1
                let chain = narayana_chain(n, 0)?;
                out.push(match case.kind {
                    Kind::NarayanaUpper => rec(n).values(
                        Value::int(0),
                        Value::int(chain.middle),
                        chain.upper_verdict(),
                    ),
                    Kind::NarayanaDelta => rec(n).values(
                        Value::int(chain.middle),
                        Value::int(chain.top),
                        chain.delta_verdict(),
                    ),
                    _ => against(rec(n), &BigInt::zero(), &chain.m_lower),
                });
            }
        }
        Kind::SubfactorialAsymptotic => {
            for n in range {
                let (lo, hi) = subfactorial_residual(n)?;
                let enclosure = Interval::new(
                    Interval::from_ratio(&lo).lo(),
                    Interval::from_ratio(&hi).hi(),
                );
                out.push(rec(n).values(Value::Real(enclosure), Value::Empty, Verdict::Reported));
            }
        }
        Kind::Wilson => {
            for q in (3..=shard.n_hi).filter(|&q| is_prime(q)) {
                let w = wilson_congruence(Prime::new(q)?)?;
                let verdict = if w.holds {
                    Verdict::Holds
                } else {
                    Verdict::Violated
                };
                let at = AuditRecord::new(case.id, case.soundness, Some(q), q);
                out.push(at.values(Value::int(w.lhs), Value::int(w.rhs), verdict));
            }
        }
    }
    debug_assert!(
        case.relation != Relation::Report || out.iter().all(|r| r.verdict == Verdict::Reported)
    );
    sort_records(&mut out);
    Ok(out)
}

/// Rational enclosure of |!n − n!/e − Σ_{k=1}^{2} (−1)^{n+k−1}B_k/n^k|·n³.
pub fn subfactorial_residual(n: u64) -> Result<(BigRational, BigRational)> {
    if n == 0 {
        return Err(Error::domain("subfactorial residual needs n ≥ 1"));
    }
    let terms =
        u32::try_from(n + 30).map_err(|_| Error::resource("subfactorial residual", n, u32::MAX))?;
    let (inv_lo, inv_hi) = inv_e_bracket(terms);
    let fact = int(bigint(&factorial(n)));
    let mut head = int(bigint(&sequences::subfactorial(n)?));
    let nn = BigInt::from(n);
    for k in 1..=2u32 {
        let term = ratio(bigint(&sequences::bell(k as u64)?), nn.pow(k));
        // (−1)^{n+k−1}
        if (n + k as u64 - 1) % 2 == 0 {
            head -= term;
        } else {
            head += term;
        }
    }
    let cube = int(nn.pow(3));
    let a = (&head - &fact * &inv_hi) * &cube;
    let b = (&head - &fact * &inv_lo) * &cube;
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Ok(if lo.is_negative() && hi.is_positive() {
        (BigRational::zero(), lo.abs().max(hi))
    } else if hi.is_negative() || hi.is_zero() {
        (hi.abs(), lo.abs())
    } else {
        (lo, hi)
    })
}
