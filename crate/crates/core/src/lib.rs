//! Exact p-adic valuations for factorial-family "giant numbers".
//!
//! The crate computes ν_p of factorials, hyperfactorials, superfactorials,
//! iterated-factorial products, tetration towers, Stirling, Catalan and
//! Narayana numbers without materializing the numbers wherever a closed
//! formula exists. Around that it provides:
//!
//! * [`bounds`]: lower/upper bounds on those valuations as exact rationals
//!   (plus logarithmic terms compared by integer powering), split into
//!   proved-sound compositions and verbatim "as-printed" formulas;
//! * [`oracle`]: a deliberately naive ground truth that builds the literal
//!   numbers and counts divisions;
//! * [`audit`]: a registry of every inequality and a grid scanner that
//!   evaluates each one against exact valuations.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the CLI and report
//! formats live in the `giantval` companion crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod arith;
pub mod audit;
pub mod bound;
pub mod bounds;
mod error;
pub mod interval;
pub mod oracle;
pub mod prime;
pub mod sequences;
pub mod stirling;
pub mod tetration;
pub mod valuation;

pub use arith::{digit_sum, digit_sum_u64, floor_log, floor_log_u64, Natural};
pub use error::{Error, Result};
pub use prime::Prime;
pub use valuation::Valuation;

/// Largest `n` accepted by operations that loop over `1..=n` with word-size
/// state (hyperfactorial methods, double hyperfactorial).
pub const ITERATIVE_LIMIT: u64 = 1 << 32;

/// Largest `n` accepted by operations that carry a running big factorial
/// (F1/F2/F3, ultrafactorial, Berezin base).
pub const FACTORIAL_LOOP_LIMIT: u64 = 1 << 16;

pub(crate) fn check_limit(what: &'static str, n: u64, cap: u64) -> Result<()> {
    if n > cap {
        Err(Error::resource(what, n, cap))
    } else {
        Ok(())
    }
}
