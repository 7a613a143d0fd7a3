//! Acceptance gate: one line per criterion, nonzero exit if any criterion fails.
//! Criterion 8 is report-only and never fails the gate.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use giantval_core::audit::{plan, run_shard, subfactorial_residual};
use giantval_core::bound::{Soundness, Verdict};
use giantval_core::bounds::{
    decastro_complex_raw, decastro_val, factorial_bounds_hold_u64, COMPLEX_TOLERANCE,
};
use giantval_core::interval::Interval;
use giantval_core::oracle::{oracle_check, Family};
use giantval_core::stirling::{stirling1_val_formula, StirlingDecomposition};
use giantval_core::tetration::{berezin_val, tetration_mod};
use giantval_core::valuation::{
    catalan_val, catalan_val2_forms, double_hyperfactorial_val, factorial_val, factorial_val_u64,
    hyperfactorial_val, wilson_congruence, HyperMethod,
};
use giantval_core::{Natural, Prime};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

enum Outcome {
    Pass(String),
    Fail(String),
    Report(String),
}

use Outcome::{Fail, Pass, Report};

type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Pass(detail)
    } else {
        Fail(detail)
    }
}

fn primes_upto(bound: u64) -> Vec<Prime> {
    Prime::up_to(bound)
}

fn nu_word(mut k: u64, q: u64) -> u64 {
    let mut v = 0;
    while k % q == 0 {
        k /= q;
        v += 1;
    }
    v
}

fn nu_big(x: &BigUint, q: u64) -> u64 {
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (d, r) = (&x / q, &x % q);
        if !r.is_zero() {
            return v;
        }
        x = d;
        v += 1;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn oracle_equivalence() -> Outcome {
    let six = Prime::first(6);
    let three = vec![Prime::new(3).unwrap()];
    let plan: [(Family, u64, &[Prime]); 13] = [
        (Family::Factorial, 300, &six),
        (Family::DoubleFactorial, 300, &six),
        (Family::Hyperfactorial, 300, &six),
        (Family::DoubleHyperfactorial, 300, &six),
        (Family::Superfactorial, 300, &six),
        (Family::F1, 300, &six),
        (Family::F2, 300, &six),
        (Family::F3, 8, &six),
        (Family::Ultrafactorial, 8, &six),
        (Family::Stirling, 60, &six),
        (Family::Catalan, 2000, &six),
        (Family::Subfactorial, 500, &six),
        (Family::Narayana, 5000, &three),
    ];
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (family, hi, primes) in plan {
        match oracle_check(&[family], 0..=hi, primes) {
            Ok(found) => mismatches.extend(found),
            Err(e) => return Fail(format!("{family}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let detail = format!("{} mismatches over 13 families", mismatches.len());
    match mismatches.first() {
        Some(m) => Fail(format!("{detail}; first {m}")),
        None => check(
            elapsed < Duration::from_secs(120),
            format!("{detail}, budget 120 s"),
        ),
    }
}

fn legendre_and_mainineq() -> Outcome {
    const N: u64 = 1_000_000;
    let primes = primes_upto(97);
    let start = Instant::now();
    let mut failures = 0u64;
    for &p in &primes {
        let q = p.get();
        let mut val = 0u64;
        let mut floor_log = 0u64;
        let mut next_power = q;
        for n in 1..=N {
            val += nu_word(n, q);
            if n == next_power {
                floor_log += 1;
                next_power *= q;
            }
            let mut rest = n;
            let mut digits = 0;
            while rest > 0 {
                digits += rest % q;
                rest /= q;
            }
            let dual = (n - digits) / (q - 1);
            let lower = n <= (q - 1) * (val + floor_log + 1);
            let upper = (q - 1) * val < n;
            let core_ok = factorial_val_u64(n, p).ok() == Some(val)
                && factorial_bounds_hold_u64(n, p, val).ok() == Some((true, true));
            if dual != val || !lower || !upper || !core_ok {
                failures += 1;
            }
        }
    }
    let sweep = start.elapsed();
    let n = 1_000_000_000_000_000_000u64;
    let two = Prime::new(2).unwrap();
    let want = Natural::from(n - u64::from(n.count_ones()));
    let mut best = Duration::MAX;
    let mut exact = true;
    for _ in 0..5 {
        let t = Instant::now();
        let got = factorial_val(&Natural::from(n), two);
        best = best.min(t.elapsed());
        exact &= got.map(|v| v.into_inner()) == Ok(want.clone());
    }
    check(
        failures == 0 && sweep < Duration::from_secs(10) && exact && best < Duration::from_millis(1),
        format!(
            "{failures} failures over n ≤ 10^6, {} primes in {:.2} s; ν_2((10^18)!) exact={exact} in {:.1} µs",
            primes.len(),
            sweep.as_secs_f64(),
            best.as_secs_f64() * 1e6
        ),
    )
}

fn sound_bounds() -> Outcome {
    let primes = Prime::first(10);
    let plan = match plan(&["all"], 2000, &primes) {
        Ok(plan) => plan,
        Err(e) => return Fail(e.to_string()),
    };
    let (mut records, mut violated, mut indeterminate, mut cases) =
        (0usize, 0usize, 0usize, 0usize);
    let mut first = None;
    for case in &plan.cases {
        if case.soundness == Soundness::ProvedSound {
            cases += 1;
        }
    }
    for shard in plan
        .shards()
        .iter()
        .filter(|s| s.case.soundness == Soundness::ProvedSound)
    {
        let recs = match run_shard(shard) {
            Ok(r) => r,
            Err(e) => return Fail(format!("{}: {e}", shard.case.id)),
        };
        records += recs.len();
        for r in recs {
            match r.verdict {
                Verdict::Violated => {
                    violated += 1;
                    first.get_or_insert(format!("{} p={:?} n={} k={:?}", r.case_id, r.p, r.n, r.k));
                }
                Verdict::Indeterminate => indeterminate += 1,
                _ => {}
            }
        }
    }
    let detail = format!("{cases} proved-sound cases, {records} records, {violated} violated, {indeterminate} indeterminate");
    match first {
        Some(at) => Fail(format!("{detail}; first at {at}")),
        None => Pass(detail),
    }
}

fn golden_findings() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = giantval::run(
        [
            "giantval",
            "audit",
            "--cases",
            "printed-23,catalan-printed-lower,decastro-printed-lower,binomial-printed-minus-one",
            "--n-max",
            "24",
            "--primes",
            "2,3",
        ],
        &mut out,
        &mut err,
    );
    let out = String::from_utf8(out).unwrap_or_default();
    let err = String::from_utf8(err).unwrap_or_default();
    let golden_csv = include_str!("golden/findings.csv");
    let golden_txt = include_str!("golden/findings.txt");
    let rows = [
        "printed-23,2,6,,,,16,58,violated",
        "catalan-printed-lower,2,20,,,,2,~10.60768258,violated",
        "decastro-printed-lower,2,4,,,,2,3,violated",
        "binomial-printed-minus-one,,4,1,,,4,3,violated",
    ];
    let found = rows
        .iter()
        .filter(|row| out.lines().any(|l| l == **row))
        .count();
    check(
        code == 0 && out == golden_csv && err == golden_txt && found == rows.len(),
        format!(
            "exit {code}, csv {}, findings section {}, {found}/4 rows",
            if out == golden_csv {
                "matches"
            } else {
                "differs"
            },
            if err == golden_txt {
                "matches"
            } else {
                "differs"
            },
        ),
    )
}

fn stirling_table(n_max: usize) -> Vec<Vec<BigUint>> {
    // |s(n, k)| = (n−1)|s(n−1, k)| + |s(n−1, k−1)|
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigUint::zero(); n + 1];
        for k in 1..=n {
            let mut v = prev.get(k - 1).cloned().unwrap_or_default();
            if k < n {
                v += &prev[k] * (n as u64 - 1);
            }
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}

fn identities() -> Outcome {
    let mut failures = Vec::new();

    let mut h2_points = 0;
    for p in primes_upto(31) {
        let q = p.get();
        let own = |n: u64| -> u64 { (1..=n).rev().step_by(2).map(|k| k * nu_word(k, q)).sum() };
        for n in 1..=500u64 {
            let h2 = |m: u64| {
                double_hyperfactorial_val(m, p)
                    .map(|v| v.to_u64().unwrap_or(u64::MAX))
                    .unwrap_or(u64::MAX)
            };
            let h = hyperfactorial_val(n, p, HyperMethod::Direct)
                .ok()
                .and_then(|v| v.to_u64());
            let split = h2(n) + h2(n - 1);
            let mut doubled = 2 * (h2(n) + h2(n - 1));
            if q == 2 {
                doubled += n * (n + 1);
            }
            if h2(n) != own(n) || Some(split) != h || h2(2 * n) != doubled {
                failures.push(format!("H2 n={n} p={q}"));
            }
            h2_points += 1;
        }
    }

    let two = Prime::new(2).unwrap();
    for n in 0..=100_000u64 {
        let want = Natural::from(u64::from((n + 1).count_ones()) - 1);
        let nat = Natural::from(n);
        let forms_ok = catalan_val2_forms(&nat).is_ok_and(|f| f.iter().all(|x| *x == want));
        let kummer_ok = catalan_val(&nat, two).is_ok_and(|v| v.into_inner() == want);
        if !forms_ok || !kummer_ok {
            failures.push(format!("Catalan n={n}"));
        }
    }

    let table = stirling_table(61);
    let mut ky_points = 0;
    for q in [2u64, 3, 5] {
        let p = Prime::new(q).unwrap();
        for k in 1..=5u64 {
            for r in 0..=3u32 {
                for m in 0..q.pow(r) {
                    let n = k * q.pow(r) + m;
                    if n > 60 {
                        continue;
                    }
                    let dec = StirlingDecomposition::new(k, r, m, p).expect("valid decomposition");
                    let want = nu_big(&table[n as usize + 1][k as usize + 1], q);
                    if stirling1_val_formula(&dec).ok().and_then(|v| v.to_u64()) != Some(want) {
                        failures.push(format!("Stirling n={n} k={k} r={r} m={m} p={q}"));
                    }
                    ky_points += 1;
                }
            }
        }
    }

    let odd_primes: Vec<Prime> = primes_upto(499)
        .into_iter()
        .filter(|p| p.get() > 2)
        .collect();
    for &p in &odd_primes {
        let q = p.get();
        let (mut fact, mut sf, mut hyper) = (1u64, 1u64, 1u64);
        for k in 1..q {
            fact = mul_mod(fact, k, q);
            sf = mul_mod(sf, fact, q);
            let mut kk = 1;
            for _ in 0..k {
                kk = mul_mod(kk, k, q);
            }
            hyper = mul_mod(hyper, kk, q);
        }
        let rhs = if (q - 1) / 2 % 2 == 0 {
            hyper
        } else {
            (q - hyper) % q
        };
        if sf != rhs || !wilson_congruence(p).is_ok_and(|w| w.holds) {
            failures.push(format!("Wilson p={q}"));
        }
    }

    let detail = format!(
        "{h2_points} H2 points, 100001 Catalan points, {ky_points} Stirling decompositions, {} Wilson primes; {} failures",
        odd_primes.len(),
        failures.len()
    );
    match failures.first() {
        Some(f) => Fail(format!("{detail}; first {f}")),
        None => Pass(detail),
    }
}

fn de_castro() -> Outcome {
    let (mut failures, mut worst) = (Vec::new(), 0.0f64);
    for p in primes_upto(31) {
        let q = p.get();
        for n in 1..=2000u64 {
            let want = nu_word(n, q);
            let exact = decastro_val(n, p).ok().and_then(|v| v.to_u64());
            let complex = decastro_complex_raw(n, p);
            if let Ok((_, residual)) = complex {
                worst = worst.max(residual);
            }
            let complex_ok =
                complex.is_ok_and(|(v, residual)| v == want && residual < COMPLEX_TOLERANCE);
            if exact != Some(want) || !complex_ok {
                failures.push(format!("n={n} p={q}"));
            }
        }
    }
    let detail = format!(
        "{} failures, worst complex residual {worst:.2e}",
        failures.len()
    );
    match failures.first() {
        Some(f) => Fail(format!("{detail}; first {f}")),
        None => Pass(detail),
    }
}

fn tetration() -> Outcome {
    const M: u64 = 1_000_000;
    let mut failures = 0u64;
    let mut points = 0u64;
    for a in 1..=5u64 {
        let mut tower = BigUint::one();
        for h in 0..=3u64 {
            if h > 0 {
                tower = BigUint::from(a).pow(tower.to_u32().expect("a↑↑2 ≤ 3125"));
            }
            let (an, hn) = (Natural::from(a), Natural::from(h));
            for m in 1..=M {
                let want = (&tower % m).to_u64().unwrap();
                if tetration_mod(&an, &hn, m).ok() != Some(want) {
                    failures += 1;
                }
                points += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = giantval::run(
        [
            "giantval",
            "berezin-digits",
            "-n",
            "3",
            "--base",
            "10",
            "--digits",
            "1",
        ],
        &mut out,
        &mut err,
    );
    let digits = String::from_utf8(out).unwrap_or_default();
    let two = Prime::new(2).unwrap();
    // 2$ = 2↑↑2 = 4
    let own = nu_big(&BigUint::from(2u32).pow(2), 2);
    let tower_val = berezin_val(2, two).ok().and_then(|t| t.exact(64));
    let nu_ok = own == 2 && tower_val == Some(Natural::from(2u32));
    check(
        failures == 0 && code == 0 && digits == "6\n" && nu_ok,
        format!(
            "{failures} mismatches over {points} (a, h, m); berezin-digits 3 → {}; ν_2(2$) = {}",
            digits.trim(),
            tower_val.map_or("?".into(), |v| v.to_string())
        ),
    )
}

fn subfactorial_report() -> Outcome {
    let mut rows = Vec::new();
    for n in 20..=200u64 {
        match subfactorial_residual(n) {
            Ok((lo, hi)) => rows.push((
                n,
                Interval::from_ratio(&lo).lo(),
                Interval::from_ratio(&hi).hi(),
            )),
            Err(e) => return Report(format!("residual unavailable at n={n}: {e}")),
        }
    }
    let mid = |r: &(u64, f64, f64)| (r.1 + r.2) / 2.0;
    let max = rows.iter().map(mid).fold(f64::MIN, f64::max);
    let min = rows.iter().map(mid).fold(f64::MAX, f64::min);
    let width = rows.iter().map(|r| r.2 - r.1).fold(0.0, f64::max);
    let split = rows.len() / 2;
    let early = rows[..split].iter().map(mid).fold(f64::MIN, f64::max);
    let late = rows[split..].iter().map(mid).fold(f64::MIN, f64::max);
    let increasing = rows.windows(2).all(|w| mid(&w[1]) > mid(&w[0]));
    let last = rows.last().map(mid).unwrap_or(f64::NAN);
    // the first omitted term is (−1)^{n+2}·B_3/n³ with B_3 = 5
    let below_b3 = rows.iter().all(|r| r.2 < 5.0);
    Report(format!(
        "residual·n³ on [20, 200]: min {min:.6}, max {max:.6}, at 200 {last:.6}; max on first half {early:.6}, second half {late:.6}; monotone increasing: {increasing}; all below B_3 = 5: {below_b3}; widest enclosure {width:.1e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence within caps", oracle_equivalence),
        (
            "Legendre dual form and factorial sandwich to 10^6",
            legendre_and_mainineq,
        ),
        (
            "proved-sound bounds over n ≤ 2000, first 10 primes",
            sound_bounds,
        ),
        ("golden findings", golden_findings),
        ("identity suite", identities),
        ("de Castro exact and complex forms", de_castro),
        ("tetration and Berezin", tetration),
        ("subfactorial residual (report only)", subfactorial_report),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Pass(d) => ("PASS", d),
            Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Report(d) => ("REPORT", d),
        };
        println!(
            "criterion {} [{name}]: {tag} ({detail}; {secs:.2} s)",
            i + 1
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
