use giantval_core::oracle::{binomial_mod_p, build_number, extract_val, Family};
use giantval_core::valuation::{
    catalan_val, catalan_val2_forms, double_factorial_val, double_hyperfactorial_val, f_val,
    factorial_val, factorial_val_u64, hyperfactorial_val, nu_int, superfactorial_val, FFamily,
    HyperMethod,
};
use giantval_core::{Error, Natural, Prime, Valuation};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

const SMALL_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(SMALL_PRIMES.to_vec()).prop_map(|q| Prime::new(q).unwrap())
}

fn nu_word(mut k: u64, q: u64) -> u64 {
    let mut v = 0;
    while k % q == 0 {
        k /= q;
        v += 1;
    }
    v
}

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

// base-p digits of a big integer, by repeated division
fn digit_sum_big(n: &BigUint, q: u64) -> BigUint {
    let mut rest = n.clone();
    let mut s = BigUint::zero();
    let q = BigUint::from(q);
    while !rest.is_zero() {
        s += &rest % &q;
        rest /= &q;
    }
    s
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn factorial_matches_termwise_sum(n in 1u64..4000, p in prime()) {
        let oracle: u64 = (1..=n).map(|k| nu_word(k, p.get())).sum();
        prop_assert_eq!(factorial_val_u64(n, p).unwrap(), oracle);
        prop_assert_eq!(factorial_val(&nat(n), p).unwrap(), oracle);
    }

    #[test]
    fn factorial_big_argument_digit_form(hi in any::<u64>(), lo in any::<u64>(), p in prime()) {
        let n = (BigUint::from(hi) << 64u32) + lo;
        let expected = (&n - digit_sum_big(&n, p.get())) / BigUint::from(p.get() - 1);
        prop_assert_eq!(factorial_val(&n, p).unwrap().into_inner(), expected);
    }

    #[test]
    fn hyperfactorial_methods_agree(n in 0u64..3000, p in prime()) {
        let oracle: u64 = (1..=n).map(|k| k * nu_word(k, p.get())).sum();
        prop_assert_eq!(hyperfactorial_val(n, p, HyperMethod::Direct).unwrap(), oracle);
        prop_assert_eq!(hyperfactorial_val(n, p, HyperMethod::Recurrence).unwrap(), oracle);
    }

    #[test]
    fn double_hyperfactorial_splits_hyperfactorial(n in 1u64..3000, p in prime()) {
        let h = hyperfactorial_val(n, p, HyperMethod::Direct).unwrap().into_inner();
        let h2 = double_hyperfactorial_val(n, p).unwrap().into_inner() + double_hyperfactorial_val(n - 1, p).unwrap().into_inner();
        prop_assert_eq!(h2, h);
    }

    #[test]
    fn double_hyperfactorial_doubling(n in 1u64..1500, p in prime()) {
        let lhs = double_hyperfactorial_val(2 * n, p).unwrap().into_inner();
        let mut rhs = (double_hyperfactorial_val(n, p).unwrap().into_inner()
            + double_hyperfactorial_val(n - 1, p).unwrap().into_inner())
            * 2u32;
        if p.get() == 2 {
            rhs += nat(n * (n + 1));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn superfactorial_is_sum_of_factorials(n in 0u64..2000, p in prime()) {
        let oracle: u64 = (1..=n).map(|k| factorial_val_u64(k, p).unwrap()).sum();
        prop_assert_eq!(superfactorial_val(&nat(n), p), Valuation::from(oracle));
    }

    #[test]
    fn double_factorial_termwise(n in 0u64..3000, p in prime()) {
        let oracle: u64 = (1..=n).rev().step_by(2).map(|k| nu_word(k, p.get())).sum();
        prop_assert_eq!(double_factorial_val(&nat(n), p).unwrap(), oracle);
    }

    #[test]
    fn catalan_forms_agree(n in 0u64..1_000_000) {
        let two = Prime::new(2).unwrap();
        let kummer = catalan_val(&nat(n), two).unwrap().into_inner();
        let ones = u64::from((n + 1).count_ones()) - 1;
        prop_assert_eq!(&kummer, &nat(ones));
        for form in catalan_val2_forms(&nat(n)).unwrap() {
            prop_assert_eq!(&form, &kummer);
        }
    }

    #[test]
    fn catalan_matches_literal(n in 0u64..400, p in prime()) {
        let c = binomial(2 * n, n) / (n + 1);
        prop_assert_eq!(catalan_val(&nat(n), p).unwrap(), extract_val(&c, p).unwrap());
    }

    #[test]
    fn extract_val_counts_prime_factors(e in 0u32..200, unit in 1u64..1_000_000, p in prime()) {
        let unit = if unit % p.get() == 0 { unit + 1 } else { unit };
        let x = BigUint::from(p.get()).pow(e) * unit;
        prop_assert_eq!(extract_val(&x, p).unwrap(), u64::from(e));
        prop_assert_eq!(nu_int(&x, p).unwrap(), u64::from(e));
    }

    #[test]
    fn lucas_matches_binomial(n in 0u64..500, k in 0u64..500, q in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let k = k.min(n);
        let p = Prime::new(q).unwrap();
        let direct = (binomial(n, k) % q).to_u64().unwrap();
        prop_assert_eq!(binomial_mod_p(&nat(n), &nat(k), p), direct);
    }

    #[test]
    fn f_family_matches_construction(n in 0u64..=6, p in prime()) {
        for (family, oracle) in [
            (FFamily::F1, Family::F1),
            (FFamily::F2, Family::F2),
            (FFamily::F3, Family::F3),
            (FFamily::Ultra, Family::Ultrafactorial),
        ] {
            let built = build_number(oracle, n, None).unwrap();
            prop_assert_eq!(f_val(family, n, p).unwrap(), extract_val(&built, p).unwrap());
        }
    }
}

#[test]
fn zero_has_no_valuation() {
    let p = Prime::new(3).unwrap();
    assert_eq!(nu_int(&Natural::zero(), p), Err(Error::UndefinedValuation));
    assert!(extract_val(&Natural::zero(), p).is_err());
}

#[test]
fn factorial_of_ten_to_eighteen() {
    let n = 1_000_000_000_000_000_000u64;
    let two = Prime::new(2).unwrap();
    let expected = n - u64::from(n.count_ones());
    assert_eq!(factorial_val(&nat(n), two).unwrap(), expected);
}
