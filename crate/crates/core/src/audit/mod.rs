//! The inequality registry, a grid scanner and the record format.
//!
//! Every case compares an exact quantity (lhs) against a bound (rhs). A
//! `violated` verdict is only issued on a certified comparison; anything the
//! comparison can't separate is `indeterminate` and never counts against a
//! case.

mod record;
mod registry;
mod scan;

pub use record::{AuditRecord, AuditSummary, Value, EXACT_DIGITS};
pub use registry::{find, groups, registry, select, FCase, Grid, InequalityCase, Kind, Relation};
pub use scan::{merge, plan, run_shard, scan, subfactorial_residual, ScanPlan, Shard};
