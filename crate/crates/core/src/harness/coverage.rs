//! Brute-force coverage oracle: which elements of a window are of the form
//! `x⁻¹y` with `x, y` drawn from a bounded window of the subsemigroup.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::element::Element;
use crate::subsemigroup::Subsemigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    /// Elements with both coordinates at most `window` are examined.
    pub window: u64,
    /// `x` and `y` range over members with both coordinates at most this.
    pub pair_bound: u64,
    pub covered: BTreeSet<Element>,
    pub gaps: BTreeSet<Element>,
}

impl CoverageReport {
    pub fn is_complete(&self) -> bool {
        self.gaps.is_empty()
    }
}

/// `3·(2W + extent + 4)`, where `extent` is `p + default_m` plus the largest
/// row override. Large enough for every witness formula to land inside.
pub fn default_pair_bound(s: &Subsemigroup, window: u64) -> u64 {
    window
        .saturating_mul(2)
        .saturating_add(s.extent())
        .saturating_add(4)
        .saturating_mul(3)
}

pub fn coverage(s: &Subsemigroup, window: u64) -> CoverageReport {
    coverage_with_pairs(s, window, default_pair_bound(s, window))
}

/// Coverage with an explicit pair bound.
///
/// The column of `x⁻¹y` is at least the column of `y` and its row at least
/// the column of `x`, so only members with column at most `window` can
/// contribute; the others are skipped without changing the result.
/// Pairs are split across threads and merged by set union, so the report
/// does not depend on scheduling.
pub fn coverage_with_pairs(s: &Subsemigroup, window: u64, pair_bound: u64) -> CoverageReport {
    let candidates: Vec<Element> = s
        .enumerate_rect(pair_bound, window.min(pair_bound))
        .into_iter()
        .collect();
    let covered = candidates
        .par_iter()
        .fold(BTreeSet::new, |mut acc, &x| {
            let xinv = x.inverse();
            for &y in &candidates {
                if let Some(c) = xinv.checked_mul(y) {
                    if c.i <= window && c.j <= window {
                        acc.insert(c);
                    }
                }
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let gaps = (0..=window)
        .flat_map(|i| (0..=window).map(move |j| Element::new(i, j)))
        .filter(|x| !covered.contains(x))
        .collect();
    CoverageReport {
        window,
        pair_bound,
        covered,
        gaps,
    }
}
