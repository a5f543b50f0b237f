//! Spec files, rendering and the brute-force oracles used to cross-check
//! the decision procedures.

pub mod coverage;
pub mod crosscheck;
pub mod format;
pub mod render;

pub use coverage::{coverage, coverage_with_pairs, default_pair_bound, CoverageReport};
pub use crosscheck::{cross_validate, CrossCheck};
pub use format::{parse_spec, parse_spec_unvalidated};
pub use render::render_window;
