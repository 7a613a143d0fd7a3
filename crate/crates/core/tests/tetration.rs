use giantval_core::tetration::{berezin_mod, berezin_val, berezin_val_mod, tetration_mod};
use giantval_core::{Natural, Prime};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

fn tower(a: u64, h: u32) -> BigUint {
    let mut v = BigUint::one();
    for _ in 0..h {
        v = BigUint::from(a).pow(v.to_u32().expect("exponent fits"));
    }
    v
}

proptest! {
    #[test]
    fn tetration_matches_direct(a in 1u64..=5, h in 0u32..=3, m in 1u64..=1_000_000) {
        let want = (tower(a, h) % m).to_u64().unwrap();
        prop_assert_eq!(tetration_mod(&Natural::from(a), &Natural::from(h), m).unwrap(), want);
    }

    #[test]
    fn tall_tower_stabilises(a in 2u64..50, m in 1u64..100_000) {
        // a↑↑h mod m is constant once h exceeds the totient-chain length
        let at = |h: u64| tetration_mod(&Natural::from(a), &Natural::from(h), m).unwrap();
        prop_assert_eq!(at(40), at(41));
        prop_assert_eq!(at(40), at(1_000_000));
    }
}

#[test]
fn berezin_of_two() {
    let two = Prime::new(2).unwrap();
    let t = berezin_val(2, two).unwrap();
    assert_eq!(t.exact(64), Some(Natural::from(2u32)));
    assert_eq!(berezin_mod(2, 1000).unwrap(), 4);
}

#[test]
fn berezin_of_three() {
    // 3$ = 6↑↑6
    assert_eq!(berezin_mod(3, 10).unwrap(), 6);
    let three = Prime::new(3).unwrap();
    assert_eq!(berezin_val_mod(3, three, 10).unwrap(), 6);
    assert!(berezin_val(3, Prime::new(5).unwrap()).unwrap().is_zero());
    assert!(berezin_val(1, three).is_err());
}
