//! Fixtures shared by the criterion benchmarks.

use bicyclic_core::{named, Element, Subsemigroup};

/// The named subsemigroups benchmarked by `decision`, with labels.
pub fn fixtures() -> Vec<(&'static str, Subsemigroup)> {
    [
        ("r1", named::r1()),
        ("b_plus", named::b_plus()),
        ("lower_t2", named::lower_t(2)),
        ("twosided_ii_p2", named::two_sided_ii(2, [0, 1])),
        ("lower_column0", named::lower_column0()),
    ]
    .into_iter()
    .map(|(name, spec)| (name, Subsemigroup::new(spec).expect("fixture is valid")))
    .collect()
}

/// All elements with coordinates at most `w`.
pub fn square(w: u64) -> Vec<Element> {
    (0..=w)
        .flat_map(|i| (0..=w).map(move |j| Element::new(i, j)))
        .collect()
}
