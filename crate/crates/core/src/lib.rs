//! Exact decision procedures for finite sets of integer vectors: closedness
//! under (partial) operations, 2-decomposability, discrete convexity, and
//! representability by SVPI, DC, UTVPI and TVPI inequality systems.
//!
//! All arithmetic is exact ([`Int`] and [`Rational`]). Coordinate indices are
//! zero-based in the API and printed one-based.

use std::sync::atomic::{AtomicU64, Ordering};

pub mod classify;
pub mod closure;
pub mod convexity;
pub mod decomp;
pub mod error;
pub mod fixtures;
mod geometry;
pub mod io;
pub mod ops;
pub mod oracle;
pub mod point;
pub mod representation;
pub mod system;
mod tuples;
pub mod verdict;
pub mod verify;

pub use classify::{classify, ClassReport, Property};
pub use error::{Error, Result};
pub use ops::{CoordinateFamily, PartialOp, TotalOp, Witness, WitnessReason};
pub use point::{bounding_box, format_indices, point_set_from_rows, BoundingBox, IndexPair, Int, Point, PointSet, Rational, RationalPoint};
pub use system::{validate_class, Inequality, LinearSystem, SystemClass};
pub use verdict::Verdict;

/// Default cap on the number of candidates any single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

static BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_BUDGET);

/// Current enumeration budget.
pub fn enumeration_budget() -> u64 {
    BUDGET.load(Ordering::Relaxed)
}

/// Sets the process-wide enumeration budget.
pub fn set_enumeration_budget(budget: u64) {
    BUDGET.store(budget, Ordering::Relaxed);
}

/// Fails with [`Error::BudgetExceeded`] when `needed` exceeds the budget.
pub(crate) fn check_budget(needed: &Int) -> Result<()> {
    let budget = enumeration_budget();
    if *needed > Int::from(budget) {
        return Err(Error::BudgetExceeded { needed: needed.to_string(), budget });
    }
    Ok(())
}
