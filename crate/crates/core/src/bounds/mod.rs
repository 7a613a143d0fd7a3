//! Lower and upper bounds on the valuations, each tagged proved-sound or
//! as-printed. Sound bounds are rebuilt by substituting the factorial bounds
//! into exact identities; printed forms are kept verbatim for the audit.

mod binomial;
mod catalan;
mod decastro;
mod factorial;
mod ffamily;
mod hyper;
mod narayana;
mod sandwich;
mod stirling;
mod sums;

pub use binomial::{agievich_ln, binomial_bounds, BinomialReport};
pub use catalan::{catalan_val_bounds, CatalanVariant};
pub use decastro::{
    decastro_complex_raw, decastro_printed_bounds, decastro_val, decastro_val_complex,
    DeCastroPrinted, COMPLEX_TOLERANCE, DECASTRO_LIMIT,
};
pub use factorial::{
    factorial_bounds_hold_u64, factorial_val_bounds, factorial_val_upper_crude,
    superfactorial_val_upper,
};
pub use ffamily::{f_val_bounds, FBounds, FRunner, F1_LOG_FORM_LIMIT};
pub use hyper::{
    hyperfactorial_composed, hyperfactorial_printed, hyperfactorial_val_bounds, HyperVariant,
};
pub use narayana::{narayana_audit_bound, narayana_chain, NarayanaAudit};
pub use sandwich::{
    f_product_bounds, f_product_bounds_check, factorial_sandwich, factorial_sandwich_check,
    factorial_sandwich_with, F13_PRODUCT_LIMIT, F2_PRODUCT_LIMIT,
};
pub use stirling::{
    stirling_normalized, stirling_normalized_check, stirling_val_bounds,
    stirling_val_lower_general, NormalizedStirling,
};
pub use sums::{sum_fact_floor_log, sum_floor_log, sum_k_floor_log};
