//! Membership predicates for the building blocks of the subsemigroup
//! classification: the diagonal, left strips, triangles, modular rows and
//! modular squares, plus their reflections in the diagonal.

use std::collections::BTreeSet;
use std::fmt;

use crate::element::Element;
use crate::error::Error;

/// A possibly infinite set of row indices, given as a finite part plus an
/// eventually periodic tail:
///
/// `finite ∪ { r + u·modulus : r ∈ residues, u >= 0, r + u·modulus >= threshold }`.
///
/// Never materialized; membership is answered arithmetically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    /// The finite part (`I0` in the row-based forms).
    pub finite: BTreeSet<u64>,
    /// Residues of the periodic tail (`R`).
    pub residues: BTreeSet<u64>,
    /// Start of the tail (`N`).
    pub threshold: u64,
    /// Period of the tail (`d`).
    pub modulus: u64,
}

impl IndexSet {
    /// A finite set of indices with no tail.
    pub fn finite(indices: impl IntoIterator<Item = u64>) -> Self {
        let finite: BTreeSet<u64> = indices.into_iter().collect();
        IndexSet {
            threshold: finite.last().map_or(0, |m| m + 1),
            finite,
            residues: BTreeSet::new(),
            modulus: 1,
        }
    }

    /// All of `N^0` with the given period.
    pub fn all(modulus: u64) -> Self {
        IndexSet {
            finite: BTreeSet::new(),
            residues: (0..modulus).collect(),
            threshold: 0,
            modulus,
        }
    }

    pub fn contains(&self, i: u64) -> bool {
        self.finite.contains(&i)
            || (i >= self.threshold
                && self.modulus > 0
                && self.residues.contains(&(i % self.modulus)))
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<u64> {
        let tail = (self.threshold..self.threshold.saturating_add(self.modulus))
            .find(|&i| self.modulus > 0 && self.residues.contains(&(i % self.modulus)));
        match (self.finite.first().copied(), tail) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.min().is_none()
    }

    /// True iff the set is all of `N^0`.
    pub fn is_everything(&self) -> bool {
        self.modulus > 0
            && (0..self.modulus).all(|r| self.residues.contains(&r))
            && (0..self.threshold).all(|i| self.finite.contains(&i))
    }

    /// Smallest index not in the set, if any.
    pub fn first_missing(&self) -> Option<u64> {
        self.missing().next()
    }

    /// Indices not in the set, in increasing order. Gaps at or past
    /// `threshold` recur with period `modulus`, so the iterator is either
    /// finite or infinite accordingly.
    pub fn missing(&self) -> impl Iterator<Item = u64> + '_ {
        let end = self.threshold.saturating_add(self.modulus);
        let periodic_gap = self.modulus == 0 || (self.threshold..end).any(|i| !self.contains(i));
        let end = if periodic_gap {
            u64::MAX
        } else {
            self.threshold
        };
        (0..end).filter(move |&i| !self.contains(i))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}", list(&self.finite))?;
        if !self.residues.is_empty() {
            write!(
                f,
                " ∪ {{r + {}u >= {} : r ∈ {{{}}}}}",
                self.modulus,
                self.threshold,
                list(&self.residues)
            )?;
        }
        Ok(())
    }
}

/// `D = {(i,i)}`.
pub fn in_diagonal(x: Element) -> bool {
    x.i == x.j
}

/// `L^p = {(i,j) : j <= p}`.
pub fn in_left_strip(x: Element, p: u64) -> bool {
    x.j <= p
}

/// `T_{q,p} = {(i,j) : q <= i <= j < p}`.
pub fn in_triangle(x: Element, q: u64, p: u64) -> Result<bool, Error> {
    if q > p {
        return Err(Error::TriangleBounds { q, p });
    }
    Ok(q <= x.i && x.i <= x.j && x.j < p)
}

/// `Λ_{i,m,d} = {(i,j) : d | j - i, j >= m}`.
///
/// Only elements on or above the diagonal qualify, since `j - i` is read
/// as a nonnegative difference.
pub fn in_lambda(x: Element, row: u64, m: u64, d: u64) -> Result<bool, Error> {
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(x.i == row && x.j >= m && x.j >= x.i && (x.j - x.i).is_multiple_of(d))
}

/// `Λ_{I,m,d}`, the union of `Λ_{i,m,d}` over `i ∈ I`.
pub fn in_lambda_set(x: Element, rows: &IndexSet, m: u64, d: u64) -> Result<bool, Error> {
    Ok(in_lambda(x, x.i, m, d)? && rows.contains(x.i))
}

/// `Σ_{p,d,P} = {(p + r + ud, p + r + vd) : r ∈ P, u, v >= 0}`.
///
/// Offsets `r` are taken literally (`p + r`), so `r >= d` is accepted here;
/// whether `P ⊆ [0, d)` is a constraint of the classification, checked
/// when a subsemigroup is validated.
pub fn in_sigma(x: Element, p: u64, d: u64, offsets: &BTreeSet<u64>) -> Result<bool, Error> {
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(offsets.iter().any(|&r| {
        let Some(base) = p.checked_add(r) else {
            return false;
        };
        x.i >= base
            && x.j >= base
            && (x.i - base).is_multiple_of(d)
            && (x.j - base).is_multiple_of(d)
    }))
}

/// `Σ_p = {(i,j) : i, j >= p}`.
pub fn in_square(x: Element, p: u64) -> bool {
    x.i >= p && x.j >= p
}

/// Evaluates `pred` on the reflection of `x` in the diagonal, which turns
/// any region predicate into the predicate of its reflected region.
pub fn reflected<T>(pred: impl Fn(Element) -> T, x: Element) -> T {
    pred(x.hat())
}
