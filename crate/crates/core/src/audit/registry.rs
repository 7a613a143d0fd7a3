use alloc::vec::Vec;

use crate::bound::{Direction, Soundness};
use crate::bounds::{
    CatalanVariant, HyperVariant, F13_PRODUCT_LIMIT, F1_LOG_FORM_LIMIT, F2_PRODUCT_LIMIT,
};
use crate::valuation::FFamily;
use crate::{Error, Result};

/// How a case relates its two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// rhs ≤ lhs is claimed.
    Lower,
    /// lhs ≤ rhs is claimed.
    Upper,
    Equality,
    /// Numbers only; no claim is checked.
    Report,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Lower => "lower",
            Relation::Upper => "upper",
            Relation::Equality => "equality",
            Relation::Report => "report",
        }
    }
}

/// Which F-family statement a case checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FCase {
    F1Factorial,
    F1FloorLog,
    F1PrintedLog,
    F2Upper,
    F2Lower,
    F3Factorial,
    F3Sum,
    F3Lower,
}

/// The evaluator behind a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Majo1,
    Mainineq(Direction),
    HyperComposed(Direction),
    HyperPrinted(HyperVariant),
    SfUpper,
    F(FCase),
    FactorialSandwich(Direction),
    Product(FFamily, Direction),
    Wk(Direction),
    Agievich,
    BinomialPrinted,
    DeCastroLower,
    DeCastroUpper,
    DeCastroAgievich,
    Nara(Direction),
    StirlingNormalized(Direction),
    StirlingGeneral,
    Catalan(CatalanVariant, Direction),
    NarayanaUpper,
    NarayanaDelta,
    NarayanaMLower,
    SubfactorialAsymptotic,
    Wilson,
}

/// How a case's points are laid out over (p, n, k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grid {
    /// Every requested prime, every n.
    PerPrime,
    /// No prime: every n (and k where the case has one).
    PrimeFree,
    /// p = 3 only, whatever primes were requested.
    Three,
    /// Odd primes p ≤ n_max, with n = p.
    OddPrimes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityCase {
    pub id: &'static str,
    /// Two-sided statements share a group; selecting it selects both sides.
    pub group: &'static str,
    /// The inequality as a formula.
    pub anchor: &'static str,
    pub soundness: Soundness,
    pub relation: Relation,
    pub kind: Kind,
    pub grid: Grid,
    pub n_min: u64,
    /// Largest n the scanner evaluates.
    pub cap: u64,
}

use Direction::{Lower as L, Upper as U};
use Soundness::{AsPrinted as PRINTED, ProvedSound as SOUND};

#[allow(clippy::too_many_arguments)]
const fn case(
    id: &'static str,
    group: &'static str,
    anchor: &'static str,
    soundness: Soundness,
    relation: Relation,
    kind: Kind,
    grid: Grid,
    n_min: u64,
    cap: u64,
) -> InequalityCase {
    InequalityCase {
        id,
        group,
        anchor,
        soundness,
        relation,
        kind,
        grid,
        n_min,
        cap,
    }
}

const BIG: u64 = 1_000_000;
const GRID: u64 = 2000;
const BINOMIAL: u64 = 300;
const STIRLING: u64 = 59;
const NARAYANA: u64 = 5000;
const WILSON: u64 = 5000;

static REGISTRY: [InequalityCase; 47] = [
    case("majo1", "majo1", "ν_p(n!) ≤ n/(p−1)", SOUND, Relation::Upper, Kind::Majo1, Grid::PerPrime, 1, BIG),
    case(
        "mainineq-lower",
        "mainineq",
        "max(0, n/(p−1) − ⌊log_p n⌋ − 1) ≤ ν_p(n!)",
        SOUND,
        Relation::Lower,
        Kind::Mainineq(L),
        Grid::PerPrime,
        1,
        BIG,
    ),
    case(
        "mainineq-upper",
        "mainineq",
        "ν_p(n!) ≤ (n−1)/(p−1)",
        SOUND,
        Relation::Upper,
        Kind::Mainineq(U),
        Grid::PerPrime,
        1,
        BIG,
    ),
    case(
        "hyper-composed-lower",
        "hyper-composed",
        "factorial bounds substituted into ν_p(H(n)) = pM·ν_p(n!) − p·Σ_{k<M} ν_p((pk)!), M = ⌊n/p⌋; lower side",
        SOUND,
        Relation::Lower,
        Kind::HyperComposed(L),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "hyper-composed-upper",
        "hyper-composed",
        "factorial bounds substituted into ν_p(H(n)) = pM·ν_p(n!) − p·Σ_{k<M} ν_p((pk)!), M = ⌊n/p⌋; upper side",
        SOUND,
        Relation::Upper,
        Kind::HyperComposed(U),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "printed-22",
        "printed-22",
        "pM(n/(p−1) − ⌊log_p n⌋ − 1) − p/(2(p−1))·(M−1)(pM−2) ≤ ν_p(H(n))",
        PRINTED,
        Relation::Lower,
        Kind::HyperPrinted(HyperVariant::Printed22),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "printed-23",
        "printed-23",
        "p/(2(p−1))·{−2 + M[4 + 2n + p(1+M)]} − pM·⌊log_p n⌋ ≤ ν_p(H(n))",
        PRINTED,
        Relation::Lower,
        Kind::HyperPrinted(HyperVariant::Printed23),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "printed-24",
        "printed-24",
        "ν_p(H(n)) ≤ pM(n−1)/(p−1) − p·Σ_{k<M}(2 + ⌊log_p k⌋ − pk/(p−1))",
        PRINTED,
        Relation::Upper,
        Kind::HyperPrinted(HyperVariant::Printed24),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "printed-26",
        "printed-26",
        "ν_p(H(n)) ≤ p/(2(p−1))·{4(p−1) + M[2 + 2n + p(M−5)]} − p·Σ_{k<M}⌊log_p k⌋",
        PRINTED,
        Relation::Upper,
        Kind::HyperPrinted(HyperVariant::Printed26),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "sf-upper",
        "sf-upper",
        "ν_p(sf(n)) ≤ n(n−1)/(2(p−1))",
        SOUND,
        Relation::Upper,
        Kind::SfUpper,
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f1-upper-factorial",
        "f1-upper-factorial",
        "ν_p(F1(n)) ≤ (n+1)! − 1",
        SOUND,
        Relation::Upper,
        Kind::F(FCase::F1Factorial),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f1-upper-floor-log",
        "f1-upper-floor-log",
        "ν_p(F1(n)) ≤ Σ_{k≤n} k!·⌊log_p k⌋",
        SOUND,
        Relation::Upper,
        Kind::F(FCase::F1FloorLog),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f1-upper-printed-log",
        "f1-upper-printed-log",
        "ν_p(F1(n)) ≤ Σ_{k≤n} k!·ln k/ln p",
        PRINTED,
        Relation::Upper,
        Kind::F(FCase::F1PrintedLog),
        Grid::PerPrime,
        1,
        F1_LOG_FORM_LIMIT,
    ),
    case(
        "f2-upper",
        "f2",
        "ν_p(F2(n)) ≤ n(n²−1)/(3(p−1))",
        SOUND,
        Relation::Upper,
        Kind::F(FCase::F2Upper),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f2-lower",
        "f2",
        "max(0, n(n+1)(2n+4−3p)/(6(p−1)) − Σ_{k≤n} k·⌊log_p k⌋) ≤ ν_p(F2(n))",
        SOUND,
        Relation::Lower,
        Kind::F(FCase::F2Lower),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f3-upper-factorial",
        "f3",
        "ν_p(F3(n)) ≤ ((n+1)! − 1)/(p−1)",
        SOUND,
        Relation::Upper,
        Kind::F(FCase::F3Factorial),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f3-upper-sum",
        "f3",
        "ν_p(F3(n)) ≤ ((n+1)! − 1 − Σ_{k≤n} k!)/(p−1)",
        SOUND,
        Relation::Upper,
        Kind::F(FCase::F3Sum),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "f3-lower",
        "f3",
        "max(0, Σ_{k≤n} (k − (p−1)(⌊log_p k⌋ + 1))·k!/(p−1)) ≤ ν_p(F3(n))",
        SOUND,
        Relation::Lower,
        Kind::F(FCase::F3Lower),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "factorial-sandwich-lower",
        "factorial-sandwich",
        "n^{n/2} ≤ n!",
        SOUND,
        Relation::Lower,
        Kind::FactorialSandwich(L),
        Grid::PrimeFree,
        1,
        GRID,
    ),
    case(
        "factorial-sandwich-upper",
        "factorial-sandwich",
        "n! ≤ ((n+1)/2)^n",
        SOUND,
        Relation::Upper,
        Kind::FactorialSandwich(U),
        Grid::PrimeFree,
        1,
        GRID,
    ),
    case(
        "f1-product-lower",
        "f1-product",
        "∏_{k≤n} k^{k^{k/2}} ≤ F1(n)",
        SOUND,
        Relation::Lower,
        Kind::Product(FFamily::F1, L),
        Grid::PrimeFree,
        1,
        F13_PRODUCT_LIMIT,
    ),
    case(
        "f1-product-upper",
        "f1-product",
        "F1(n) ≤ ∏_{k≤n} k^{((k+1)/2)^k}",
        SOUND,
        Relation::Upper,
        Kind::Product(FFamily::F1, U),
        Grid::PrimeFree,
        1,
        F13_PRODUCT_LIMIT,
    ),
    case(
        "f2-product-lower",
        "f2-product",
        "∏_{k≤n} k^{k²/2} ≤ F2(n)",
        SOUND,
        Relation::Lower,
        Kind::Product(FFamily::F2, L),
        Grid::PrimeFree,
        1,
        F2_PRODUCT_LIMIT,
    ),
    case(
        "f2-product-upper",
        "f2-product",
        "F2(n) ≤ ∏_{k≤n} ((k+1)/2)^{k²}",
        SOUND,
        Relation::Upper,
        Kind::Product(FFamily::F2, U),
        Grid::PrimeFree,
        1,
        F2_PRODUCT_LIMIT,
    ),
    case(
        "f3-product-lower",
        "f3-product",
        "∏_{k≤n} (k^{k/2})^{k^{k/2}} ≤ F3(n)",
        SOUND,
        Relation::Lower,
        Kind::Product(FFamily::F3, L),
        Grid::PrimeFree,
        1,
        F13_PRODUCT_LIMIT,
    ),
    case(
        "f3-product-upper",
        "f3-product",
        "F3(n) ≤ ∏_{k≤n} (((k+1)/2)^k)^{((k+1)/2)^k}",
        SOUND,
        Relation::Upper,
        Kind::Product(FFamily::F3, U),
        Grid::PrimeFree,
        1,
        F13_PRODUCT_LIMIT,
    ),
    case("wk-lower", "wk", "(n/k)^k ≤ C(n, k)", SOUND, Relation::Lower, Kind::Wk(L), Grid::PrimeFree, 1, BINOMIAL),
    case("wk-upper", "wk", "C(n, k) ≤ (e·n/k)^k", SOUND, Relation::Upper, Kind::Wk(U), Grid::PrimeFree, 1, BINOMIAL),
    case(
        "agievich",
        "agievich",
        "C(n, k) ≤ 2^n/√(πn/2)·exp(−(2/n)(k − n/2)² + 23/(18n))",
        SOUND,
        Relation::Upper,
        Kind::Agievich,
        Grid::PrimeFree,
        1,
        BINOMIAL,
    ),
    case(
        "binomial-printed-minus-one",
        "binomial-printed-minus-one",
        "C(n, k) ≤ n^k/k! − 1",
        PRINTED,
        Relation::Upper,
        Kind::BinomialPrinted,
        Grid::PrimeFree,
        1,
        BINOMIAL,
    ),
    case(
        "decastro-printed-lower",
        "decastro-printed",
        "Σ_{1≤j≤⌊log_p n⌋} (n/p^j)^{p^j−1} ≤ ν_p(n)",
        PRINTED,
        Relation::Lower,
        Kind::DeCastroLower,
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "decastro-printed-upper",
        "decastro-printed",
        "ν_p(n) ≤ Σ_{1≤j≤⌊log_p n⌋} (e·n/p^j)^{p^j}·p^j/n",
        PRINTED,
        Relation::Upper,
        Kind::DeCastroUpper,
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "decastro-agievich-upper",
        "decastro-agievich-upper",
        "ν_p(n) ≤ Σ_{1≤j≤⌊log_p n⌋} 2^{p^j}/√(πp^j/2)·(p^j/n)·exp(−(2/n)(p^j − n/2)² + 23/(18n))",
        PRINTED,
        Relation::Upper,
        Kind::DeCastroAgievich,
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "nara-lower",
        "nara",
        "n = k·p^r + m, 0 < m < p^r: k((p^r−1)/(p−1) − r) + max(0, m/(p−1) − ⌊log_p m⌋ − 1) ≤ ν_p|s(n+1, k+1)|",
        SOUND,
        Relation::Lower,
        Kind::Nara(L),
        Grid::PerPrime,
        1,
        STIRLING,
    ),
    case(
        "nara-upper",
        "nara",
        "n = k·p^r + m, 0 < m < p^r: ν_p|s(n+1, k+1)| ≤ k((p^r−1)/(p−1) − r) + (m−1)/(p−1)",
        SOUND,
        Relation::Upper,
        Kind::Nara(U),
        Grid::PerPrime,
        1,
        STIRLING,
    ),
    case(
        "stirling-normalized-lower",
        "stirling-normalized",
        "n ∈ A_{k,p}, n > k: k/(n−k)·⌊log_p(n/k)⌋ ≤ 1/(p−1) − ν_p|s(n+1, k+1)|/(n−k)",
        SOUND,
        Relation::Lower,
        Kind::StirlingNormalized(L),
        Grid::PerPrime,
        2,
        STIRLING,
    ),
    case(
        "stirling-normalized-upper",
        "stirling-normalized",
        "n ∈ A_{k,p}, n > k: 1/(p−1) − ν_p|s(n+1, k+1)|/(n−k) ≤ (k+1)/(n−k)·⌊log_p(n/k)⌋",
        SOUND,
        Relation::Upper,
        Kind::StirlingNormalized(U),
        Grid::PerPrime,
        2,
        STIRLING,
    ),
    case(
        "stirling-general-lower",
        "stirling-general-lower",
        "k·p^r ≤ n < k·p^{r+1}: ν_p(n!) − ν_p(⌊n/p^r⌋!) − kr ≤ ν_p|s(n+1, k+1)|",
        SOUND,
        Relation::Lower,
        Kind::StirlingGeneral,
        Grid::PerPrime,
        1,
        STIRLING,
    ),
    case(
        "catalan-composed-lower",
        "catalan-composed",
        "max(0, 2/(p−1) − ⌊log_p 2n⌋ − 1 − log_p(n+1)) ≤ ν_p(C_n)",
        SOUND,
        Relation::Lower,
        Kind::Catalan(CatalanVariant::Composed, L),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "catalan-composed-upper",
        "catalan-composed",
        "ν_p(C_n) ≤ −1/(p−1) + 2⌊log_p n⌋ + 2",
        SOUND,
        Relation::Upper,
        Kind::Catalan(CatalanVariant::Composed, U),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "catalan-printed-lower",
        "catalan-printed",
        "(n+1)/(p−1) − ⌊log_p 2n⌋ − 1 − log_p(n+1) ≤ ν_p(C_n)",
        PRINTED,
        Relation::Lower,
        Kind::Catalan(CatalanVariant::Printed, L),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "catalan-printed-upper",
        "catalan-printed",
        "ν_p(C_n) ≤ (n−1)/(p−1) + 1 + ⌊log_p n⌋",
        PRINTED,
        Relation::Upper,
        Kind::Catalan(CatalanVariant::Printed, U),
        Grid::PerPrime,
        1,
        GRID,
    ),
    case(
        "narayana-chain-upper",
        "narayana-chain",
        "ν_3(a_n) ≤ ν_3[n(n+1)(n+3)(n+8)] + 6",
        PRINTED,
        Relation::Upper,
        Kind::NarayanaUpper,
        Grid::Three,
        1,
        NARAYANA,
    ),
    case(
        "narayana-chain-delta",
        "narayana-chain",
        "ν_3[n(n+1)(n+3)(n+8)] + 6 ≤ 4·max_{δ∈{0,1,3,8}} ν_3(n+δ) + 6",
        SOUND,
        Relation::Upper,
        Kind::NarayanaDelta,
        Grid::Three,
        1,
        NARAYANA,
    ),
    case(
        "narayana-chain-m-lower",
        "narayana-chain",
        "m = n: m/2 − ⌊log_3 m⌋ − 1 ≤ ν_3(a_n)",
        PRINTED,
        Relation::Lower,
        Kind::NarayanaMLower,
        Grid::Three,
        6,
        NARAYANA,
    ),
    case(
        "subfactorial-asymptotic",
        "subfactorial-asymptotic",
        "|!n − n!/e − Σ_{k=1}^{2} (−1)^{n+k−1}·B_k/n^k|·n³, report only",
        SOUND,
        Relation::Report,
        Kind::SubfactorialAsymptotic,
        Grid::PrimeFree,
        20,
        200,
    ),
    case(
        "wilson-congruence",
        "wilson-congruence",
        "sf(p−1) ≡ (−1)^{(p−1)/2}·H(p−1) (mod p), odd p",
        SOUND,
        Relation::Equality,
        Kind::Wilson,
        Grid::OddPrimes,
        3,
        WILSON,
    ),
];

/// Every case, in registry order.
pub fn registry() -> &'static [InequalityCase] {
    &REGISTRY
}

pub fn find(id: &str) -> Result<&'static InequalityCase> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.into()))
}

/// Group names, each once, in registry order.
pub fn groups() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in &REGISTRY {
        if !out.contains(&c.group) {
            out.push(c.group);
        }
    }
    out
}

/// Cases named by a list of ids or group names (`all` selects every case).
/// The flag is true when the selection came from `all`.
pub fn select<S: AsRef<str>>(names: &[S]) -> Result<(Vec<&'static InequalityCase>, bool)> {
    if names.iter().any(|s| s.as_ref() == "all") {
        return Ok((REGISTRY.iter().collect(), true));
    }
    let mut out: Vec<&'static InequalityCase> = Vec::new();
    for name in names {
        let name = name.as_ref().trim();
        let hits: Vec<_> = REGISTRY
            .iter()
            .filter(|c| c.id == name || c.group == name)
            .collect();
        if hits.is_empty() {
            return Err(Error::UnknownCase(name.into()));
        }
        for c in hits {
            if !out.iter().any(|o| o.id == c.id) {
                out.push(c);
            }
        }
    }
    Ok((out, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_nonempty() {
        for (i, a) in REGISTRY.iter().enumerate() {
            assert!(!a.id.is_empty() && !a.anchor.is_empty());
            assert!(a.n_min <= a.cap, "{}", a.id);
            for b in &REGISTRY[i + 1..] {
                assert_ne!(a.id, b.id);
                assert_ne!(a.kind, b.kind, "{} and {}", a.id, b.id);
            }
        }
    }

    #[test]
    fn required_entries() {
        assert_eq!(find("printed-23").unwrap().soundness, Soundness::AsPrinted);
        assert_eq!(find("majo1").unwrap().soundness, Soundness::ProvedSound);
        assert_eq!(
            find("wilson-congruence").unwrap().relation,
            Relation::Equality
        );
        assert_eq!(
            find("subfactorial-asymptotic").unwrap().relation,
            Relation::Report
        );
        let (main, all) = select(&["mainineq"]).unwrap();
        assert!(!all);
        assert_eq!(main.len(), 2);
        assert!(main.iter().all(|c| c.soundness == Soundness::ProvedSound));
    }

    #[test]
    fn selection() {
        let (cases, all) = select(&["all"]).unwrap();
        assert!(all);
        assert_eq!(cases.len(), registry().len());
        let (cases, _) = select(&["printed-23", "printed-23", "f3"]).unwrap();
        assert_eq!(
            cases.iter().map(|c| c.id).collect::<Vec<_>>(),
            [
                "printed-23",
                "f3-upper-factorial",
                "f3-upper-sum",
                "f3-lower"
            ]
        );
        assert_eq!(select(&["bogus"]), Err(Error::UnknownCase("bogus".into())));
        assert!(groups().contains(&"catalan-printed"));
    }
}
