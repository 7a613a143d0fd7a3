use std::fs::File;
use std::io::{BufWriter, Write};

use giantval_core::audit::{self, merge, registry, run_shard, AuditSummary};
use giantval_core::bound::{BoundPair, Direction, ExactBound, Soundness, Verdict};
use giantval_core::bounds::{
    catalan_val_bounds, f_val_bounds, factorial_val_bounds, hyperfactorial_composed,
    hyperfactorial_printed, superfactorial_val_upper, CatalanVariant, HyperVariant,
};
use giantval_core::oracle::{oracle_check, Family as OracleFamily, Mismatch};
use giantval_core::tetration::{berezin_mod, berezin_val};
use giantval_core::valuation::{self as v, FFamily, HyperMethod};
use giantval_core::{Error, Natural, Prime, Valuation};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;
use serde_json::{json, Map, Value as Json};

use crate::args::{
    AuditArgs, BerezinArgs, BoundsArgs, Family, Format, OracleArgs, ReportFormat, ValArgs, Variant,
};
use crate::error::{CliError, CliResult};
use crate::report::{findings_section, write_csv, write_json};

fn prime(p: u64) -> CliResult<Prime> {
    Prime::new(p).map_err(|_| CliError::usage(format!("-p {p}: not a prime")))
}

pub fn parse_primes(list: &str) -> CliResult<Vec<Prime>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let q: u64 = s
                .parse()
                .map_err(|_| CliError::usage(format!("`{s}` is not a prime")))?;
            prime(q)
        })
        .collect()
}

fn word(n: &Natural, family: Family) -> CliResult<u64> {
    n.to_u64().ok_or_else(|| {
        CliError::Core(Error::ResourceLimit {
            what: "val",
            requested: format!("{family:?} at n = {n}"),
            cap: u64::MAX.to_string(),
        })
    })
}

fn family_name(f: Family) -> String {
    clap::ValueEnum::to_possible_value(&f)
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

enum Computed {
    Plain(Valuation),
    Tower(giantval_core::tetration::TowerValuation),
}

pub fn val(args: &ValArgs, out: &mut dyn Write) -> CliResult<u8> {
    let p = prime(args.p)?;
    let n = &args.n;
    if args.k.is_some() && args.family != Family::Stirling {
        return Err(CliError::usage("-k only applies to --family stirling"));
    }
    let computed = match args.family {
        Family::Factorial => Computed::Plain(v::factorial_val(n, p)?),
        Family::DoubleFactorial => Computed::Plain(v::double_factorial_val(n, p)?),
        Family::Superfactorial => Computed::Plain(v::superfactorial_val(n, p)),
        Family::Catalan => Computed::Plain(v::catalan_val(n, p)?),
        Family::Hyperfactorial => Computed::Plain(v::hyperfactorial_val(
            word(n, args.family)?,
            p,
            HyperMethod::Recurrence,
        )?),
        Family::DoubleHyperfactorial => {
            Computed::Plain(v::double_hyperfactorial_val(word(n, args.family)?, p)?)
        }
        Family::F1 => Computed::Plain(v::f_val(FFamily::F1, word(n, args.family)?, p)?),
        Family::F2 => Computed::Plain(v::f_val(FFamily::F2, word(n, args.family)?, p)?),
        Family::F3 => Computed::Plain(v::f_val(FFamily::F3, word(n, args.family)?, p)?),
        Family::Ultrafactorial => {
            Computed::Plain(v::f_val(FFamily::Ultra, word(n, args.family)?, p)?)
        }
        Family::Stirling => {
            let k = args
                .k
                .ok_or_else(|| CliError::usage("--family stirling needs -k"))?;
            Computed::Plain(v::stirling1_val(word(n, args.family)?, k, p)?)
        }
        Family::Subfactorial => Computed::Plain(v::subfactorial_val(word(n, args.family)?, p)?),
        Family::Narayana => Computed::Plain(v::narayana_val(word(n, args.family)?, p)?),
        Family::Berezin => Computed::Tower(berezin_val(word(n, args.family)?, p)?),
    };
    let residue = match (args.modulus, &computed) {
        (None, _) => None,
        (Some(0), _) => return Err(CliError::usage("--mod must be at least 1")),
        (Some(m), Computed::Plain(x)) => Some((x.value() % m).to_u64().expect("below m")),
        (Some(m), Computed::Tower(t)) => Some(t.residue(m)?),
    };
    match args.format {
        Format::Plain => {
            match &computed {
                Computed::Plain(x) => writeln!(out, "{x}")?,
                Computed::Tower(t) => writeln!(out, "{t}")?,
            }
            if let (Some(r), Some(m)) = (residue, args.modulus) {
                writeln!(out, "mod {m}: {r}")?;
            }
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("family".into(), json!(family_name(args.family)));
            obj.insert("n".into(), json!(n.to_string()));
            if let Some(k) = args.k {
                obj.insert("k".into(), json!(k));
            }
            obj.insert("p".into(), json!(args.p));
            match &computed {
                Computed::Plain(x) => {
                    obj.insert("valuation".into(), json!(x.to_string()));
                }
                Computed::Tower(t) => {
                    obj.insert(
                        "tower".into(),
                        json!({
                            "base": t.base.to_string(),
                            "height": t.height.to_string(),
                            "multiplier": t.multiplier.to_string(),
                        }),
                    );
                }
            }
            if let Some(r) = residue {
                obj.insert("residue".into(), json!(r.to_string()));
            }
            serde_json::to_writer(&mut *out, &Json::Object(obj))?;
            writeln!(out)?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BoundsJson {
    family: String,
    n: String,
    p: u64,
    variant: &'static str,
    soundness: &'static str,
    lower: String,
    lower_approx: f64,
    upper: String,
    upper_approx: f64,
    exact: String,
    inside: bool,
}

pub fn bounds(args: &BoundsArgs, out: &mut dyn Write) -> CliResult<u8> {
    let p = prime(args.p)?;
    let n = &args.n;
    let printed = args.variant == Variant::Printed;
    let no_printed = || {
        CliError::usage(format!(
            "--family {} has no printed variant",
            family_name(args.family)
        ))
    };
    let (pair, exact): (BoundPair, Valuation) = match args.family {
        Family::Factorial if !printed => (factorial_val_bounds(n, p)?, v::factorial_val(n, p)?),
        Family::Superfactorial if !printed => (
            BoundPair {
                lower: ExactBound::integer(0, Direction::Lower, Soundness::ProvedSound),
                upper: superfactorial_val_upper(n, p),
            },
            v::superfactorial_val(n, p),
        ),
        Family::Hyperfactorial => {
            let m = word(n, args.family)?;
            let pair = if printed {
                BoundPair {
                    lower: hyperfactorial_printed(m, p, HyperVariant::Printed23)?,
                    upper: hyperfactorial_printed(m, p, HyperVariant::Printed26)?,
                }
            } else {
                hyperfactorial_composed(m, p)?
            };
            (pair, v::hyperfactorial_val(m, p, HyperMethod::Recurrence)?)
        }
        Family::F1 | Family::F2 | Family::F3 if !printed => {
            let fam = match args.family {
                Family::F1 => FFamily::F1,
                Family::F2 => FFamily::F2,
                _ => FFamily::F3,
            };
            let m = word(n, args.family)?;
            (f_val_bounds(fam, m, p)?.pair(), v::f_val(fam, m, p)?)
        }
        Family::Catalan => {
            let variant = if printed {
                CatalanVariant::Printed
            } else {
                CatalanVariant::Composed
            };
            (catalan_val_bounds(n, p, variant)?, v::catalan_val(n, p)?)
        }
        Family::Factorial | Family::Superfactorial | Family::F1 | Family::F2 | Family::F3 => {
            return Err(no_printed())
        }
        f => {
            return Err(CliError::usage(format!(
                "no bounds for --family {}",
                family_name(f)
            )))
        }
    };
    let exact_int = exact.to_bigint();
    let (lv, uv) = pair.check(&exact_int);
    let inside = (lv, uv) == (Verdict::Holds, Verdict::Holds);
    let soundness = pair.lower.soundness();
    match args.format {
        Format::Plain => {
            writeln!(out, "lower {}", pair.lower)?;
            writeln!(out, "upper {}", pair.upper)?;
            writeln!(out, "exact {exact}")?;
            writeln!(out, "inside {inside}")?;
        }
        Format::Json => {
            let doc = BoundsJson {
                family: family_name(args.family),
                n: n.to_string(),
                p: args.p,
                variant: if printed { "printed" } else { "composed" },
                soundness: soundness.as_str(),
                lower: pair.lower.to_string(),
                lower_approx: pair.lower.interval().mid(),
                upper: pair.upper.to_string(),
                upper_approx: pair.upper.interval().mid(),
                exact: exact.to_string(),
                inside,
            };
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    let sound_broken =
        soundness == Soundness::ProvedSound && (lv == Verdict::Violated || uv == Verdict::Violated);
    Ok(u8::from(sound_broken))
}

fn valid_ids() -> String {
    registry()
        .iter()
        .map(|c| c.id)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn audit(
    args: &AuditArgs,
    pool: &ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<u8> {
    let names: Vec<&str> = args
        .cases
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let primes = parse_primes(&args.primes)?;
    let plan = audit::plan(&names, args.n_max, &primes).map_err(|e| match e {
        Error::UnknownCase(id) => CliError::usage(format!(
            "unknown case `{id}`; valid ids: all, {}",
            valid_ids()
        )),
        e => e.into(),
    })?;
    let shards = plan.shards();
    let parts: Vec<_> =
        pool.install(|| shards.par_iter().map(run_shard).collect::<Result<_, _>>())?;
    let records = merge(parts);
    match &args.out {
        Some(path) => {
            let file = BufWriter::new(File::create(path)?);
            match args.format {
                ReportFormat::Csv => write_csv(&records, file)?,
                ReportFormat::Json => write_json(&records, file)?,
            }
        }
        None => match args.format {
            ReportFormat::Csv => write_csv(&records, &mut *out)?,
            ReportFormat::Json => write_json(&records, &mut *out)?,
        },
    }
    write!(err, "{}", findings_section(&records))?;
    Ok(AuditSummary::of(&records).exit_code() as u8)
}

pub fn berezin_digits(args: &BerezinArgs, out: &mut dyn Write) -> CliResult<u8> {
    if args.n < 2 {
        return Err(CliError::usage("berezin-digits needs n ≥ 2"));
    }
    if !(2..=36).contains(&args.base) {
        return Err(CliError::usage("--base must be between 2 and 36"));
    }
    if args.digits == 0 {
        return Err(CliError::usage("--digits must be at least 1"));
    }
    let m = args
        .base
        .checked_pow(args.digits)
        .ok_or_else(|| CliError::usage("base^digits must fit in 64 bits"))?;
    let mut r = berezin_mod(args.n, m)?;
    let mut digits = vec![b'0'; args.digits as usize];
    for slot in digits.iter_mut().rev() {
        let d = (r % args.base) as u32;
        *slot = char::from_digit(d, 36).expect("base ≤ 36") as u8;
        r /= args.base;
    }
    writeln!(out, "{}", String::from_utf8(digits).expect("ascii"))?;
    Ok(0)
}

fn oracle_families(list: &str) -> CliResult<Vec<OracleFamily>> {
    if list.split(',').any(|s| s.trim() == "all") {
        return Ok(OracleFamily::ALL.to_vec());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<OracleFamily>().map_err(|_| {
                let names: Vec<&str> = OracleFamily::ALL.iter().map(|f| f.name()).collect();
                CliError::usage(format!(
                    "unknown family `{s}`; valid: all, {}",
                    names.join(", ")
                ))
            })
        })
        .collect()
}

pub fn oracle(args: &OracleArgs, pool: &ThreadPool, out: &mut dyn Write) -> CliResult<u8> {
    let families = oracle_families(&args.families)?;
    let primes = parse_primes(&args.primes)?;
    let jobs: Vec<(OracleFamily, Prime)> = families
        .iter()
        .flat_map(|&f| primes.iter().map(move |&p| (f, p)))
        .collect();
    let results: Vec<(OracleFamily, u64, Vec<Mismatch>)> = pool.install(|| {
        jobs.par_iter()
            .map(|&(family, p)| {
                let hi = args.n_max.unwrap_or(family.cap());
                let found = oracle_check(&[family], args.n_min..=hi, &[p])?;
                Ok((family, hi, found))
            })
            .collect::<Result<_, Error>>()
    })?;
    let mut total = 0;
    for family in &families {
        let rows: Vec<_> = results.iter().filter(|r| r.0 == *family).collect();
        let bad: usize = rows.iter().map(|r| r.2.len()).sum();
        let hi = rows.first().map_or(0, |r| r.1);
        writeln!(
            out,
            "{family}: n={}..{hi}, {} primes, {bad} mismatches",
            args.n_min,
            primes.len()
        )?;
        for m in rows.iter().flat_map(|r| &r.2) {
            writeln!(out, "  {m}")?;
        }
        total += bad;
    }
    Ok(u8::from(total > 0))
}
