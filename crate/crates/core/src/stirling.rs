//! The decomposition n = k·p^r + m behind the closed-form valuation of
//! Stirling numbers of the first kind.

use crate::valuation::factorial_val_u64;
use crate::{Error, Prime, Result, Valuation};

/// `n = k·p^r + m` with `0 ≤ m < p^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StirlingDecomposition {
    pub k: u64,
    pub r: u32,
    pub m: u64,
    pub p: Prime,
}

impl StirlingDecomposition {
    /// Validates `m < p^r` and that `k·p^r + m` fits a word.
    pub fn new(k: u64, r: u32, m: u64, p: Prime) -> Result<Self> {
        let pr = p
            .get()
            .checked_pow(r)
            .ok_or_else(|| Error::domain("p^r overflows u64"))?;
        if m >= pr {
            return Err(Error::domain("decomposition needs m < p^r"));
        }
        k.checked_mul(pr)
            .and_then(|v| v.checked_add(m))
            .ok_or_else(|| Error::domain("k·p^r + m overflows u64"))?;
        Ok(StirlingDecomposition { k, r, m, p })
    }

    pub fn p_pow_r(&self) -> u64 {
        self.p.get().pow(self.r)
    }

    /// `k·p^r + m`.
    pub fn n(&self) -> u64 {
        self.k * self.p_pow_r() + self.m
    }

    /// `(p^r − 1)/(p − 1) − r`, the per-unit-of-k part of the valuation.
    pub fn repunit_excess(&self) -> u64 {
        (self.p_pow_r() - 1) / (self.p.get() - 1) - self.r as u64
    }
}

/// Smallest `r` with `0 ≤ n − k·p^r < p^r`, or `None` when `n ∉ A_{k,p}`.
pub fn stirling_decompose(n: u64, k: u64, p: Prime) -> Result<Option<StirlingDecomposition>> {
    if n == 0 || k == 0 {
        return Err(Error::domain("stirling_decompose needs n ≥ 1 and k ≥ 1"));
    }
    let q = p.get() as u128;
    let (n128, k128) = (n as u128, k as u128);
    let mut pr: u128 = 1;
    let mut r = 0u32;
    while k128 * pr <= n128 {
        let m = n128 - k128 * pr;
        if m < pr {
            return StirlingDecomposition::new(k, r, m as u64, p).map(Some);
        }
        pr *= q;
        r += 1;
    }
    Ok(None)
}

/// ν_p|s(n+1, k+1)| = k·((p^r − 1)/(p − 1) − r) + ν_p(m!).
pub fn stirling1_val_formula(dec: &StirlingDecomposition) -> Result<Valuation> {
    let main = dec.k as u128 * dec.repunit_excess() as u128;
    Ok(Valuation::from(
        main + factorial_val_u64(dec.m, dec.p)? as u128,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::stirling1_val;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let d = stirling_decompose(5, 1, p(2)).unwrap().unwrap();
        assert_eq!((d.r, d.m), (2, 1));
        let d = stirling_decompose(2, 1, p(2)).unwrap().unwrap();
        assert_eq!((d.r, d.m), (1, 0));
        // 7 = 3·2 + 1 with 1 < 2
        let d = stirling_decompose(7, 3, p(2)).unwrap().unwrap();
        assert_eq!((d.r, d.m), (1, 1));
        assert_eq!(stirling_decompose(5, 3, p(2)).unwrap(), None);
        assert!(stirling_decompose(0, 1, p(2)).is_err());
    }

    #[test]
    fn decompose_recomposes() {
        for q in [2u64, 3, 5] {
            for n in 1..200u64 {
                for k in 1..=6u64 {
                    if let Some(d) = stirling_decompose(n, k, p(q)).unwrap() {
                        assert_eq!(d.n(), n);
                        assert!(d.m < d.p_pow_r());
                    }
                }
            }
        }
    }

    #[test]
    fn formula_examples() {
        let d = StirlingDecomposition::new(1, 2, 1, p(2)).unwrap();
        assert_eq!(stirling1_val_formula(&d).unwrap(), 1);
        let d = StirlingDecomposition::new(1, 1, 0, p(2)).unwrap();
        assert_eq!(stirling1_val_formula(&d).unwrap(), 0);
        let d = StirlingDecomposition::new(2, 0, 0, p(3)).unwrap();
        assert_eq!(stirling1_val_formula(&d).unwrap(), 0);
        assert!(StirlingDecomposition::new(1, 1, 2, p(2)).is_err());
    }

    #[test]
    fn formula_matches_recurrence_on_small_grid() {
        for q in [2u64, 3, 5] {
            for n in 1..40u64 {
                for k in 1..=5u64.min(n) {
                    if let Some(d) = stirling_decompose(n, k, p(q)).unwrap() {
                        let exact = stirling1_val(n + 1, k + 1, p(q)).unwrap();
                        assert_eq!(
                            stirling1_val_formula(&d).unwrap(),
                            exact,
                            "n={n} k={k} p={q}"
                        );
                    }
                }
            }
        }
    }
}
