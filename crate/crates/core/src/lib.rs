//! Exact computation in the bicyclic monoid `B = ⟨a, b | ba = 1⟩`.
//!
//! Elements are pairs `(i, j)` standing for `a^i b^j`. On top of the
//! arithmetic the crate provides
//!
//! - finite descriptions of every shape of subsemigroup of `B`
//!   ([`subsemigroup`]), built from the regions in [`regions`];
//! - decision procedures telling whether such a subsemigroup is a left or
//!   right I-order in `B`, with checkable certificates ([`iorder`]);
//! - explicit straight decompositions `q = x⁻¹y`, `x R y` ([`witness`]);
//! - an independent word-rewriting model of `B` ([`rewrite`]) and a
//!   brute-force coverage oracle ([`harness`]) used to cross-check all of
//!   the above.
//!
//! ```
//! use bicyclic_core::{decompose, decide_left_iorder, named, Element, Subsemigroup};
//!
//! let r1 = Subsemigroup::new(named::r1()).unwrap();
//! assert!(decide_left_iorder(&r1).is_yes());
//! let w = decompose(&r1, Element::new(3, 5)).unwrap();
//! assert_eq!(w.x.inverse() * w.y, Element::new(3, 5));
//! assert_eq!(w.x.i, w.y.i);
//! ```

pub mod element;
pub mod error;
pub mod harness;
pub mod iorder;
pub mod regions;
pub mod rewrite;
pub mod subsemigroup;
pub mod witness;

pub use element::{Element, Green};
pub use error::Error;
pub use iorder::{
    decide_left_iorder, decide_right_iorder, hat_spec, Certificate, Condition, Decision, Reason,
    Side, Uncovered,
};
pub use regions::IndexSet;
pub use rewrite::{multiply_via_rewriting, word_normalize, Word};
pub use subsemigroup::{named, Closure, Form, Subsemigroup, SubsemigroupSpec, Violation};
pub use witness::{decompose, verify_witness, Scheme, Witness};
