//! Separation and membership decisions.
//!
//! Membership in `Σi`, `Πi` and `Δi` (for `i <= 3`) is the equation
//! `s^ω <= s^ω t s^ω` (resp. `>=`, `=`) over pairs `(t, s)` of chains of the
//! level below; `BΣ2` adds equations over chains of length 3 and over
//! `B`-schemas. Every negative verdict carries the failing instance.

mod classify;
mod membership;
mod schema;
mod separation;
mod verdict;

pub use classify::{check_consistency, classify, classify_with, inclusions, ClassificationReport};
pub use membership::{
    check_pairs, decide_delta, decide_fo, decide_level, decide_pi, decide_sigma, level0_pairs, level1_pairs,
    level2_pairs, Polarity,
};
pub use schema::{compute_b_schemas, decide_bsigma2, decide_bsigma2_with, BSchema, SchemaWitness};
pub use separation::{decide_separation, decide_separation_with, Logic};
pub use verdict::{Class, Verdict, Violation};
