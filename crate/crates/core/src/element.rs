//! Elements of the bicyclic monoid in standard form `a^i b^j`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::Error;

/// The element `a^i b^j`, stored as the pair `(i, j)`.
///
/// Every element of the bicyclic monoid has exactly one such form, so
/// structural equality is equality in the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    /// Power of `a`; the row of the element in the `B` array.
    pub i: u64,
    /// Power of `b`; the column of the element in the `B` array.
    pub j: u64,
}

impl Element {
    /// The identity `1 = a^0 b^0`.
    pub const IDENTITY: Element = Element { i: 0, j: 0 };
    /// The generator `a`.
    pub const A: Element = Element { i: 1, j: 0 };
    /// The generator `b`.
    pub const B: Element = Element { i: 0, j: 1 };

    pub const fn new(i: u64, j: u64) -> Self {
        Element { i, j }
    }

    /// The idempotent `e_n = a^n b^n`.
    pub const fn idempotent(n: u64) -> Self {
        Element { i: n, j: n }
    }

    /// `(k,l)(m,n) = (k - l + t, n - m + t)` with `t = max(l, m)`.
    ///
    /// Returns `None` when a coordinate would not fit in `u64`.
    pub fn checked_mul(self, rhs: Element) -> Option<Element> {
        let t = self.j.max(rhs.i);
        // t >= l and t >= m, so the subtractions cannot underflow.
        let i = self.i.checked_add(t - self.j)?;
        let j = rhs.j.checked_add(t - rhs.i)?;
        Some(Element { i, j })
    }

    /// Like [`checked_mul`](Self::checked_mul) but reports overflow as an error.
    pub fn try_mul(self, rhs: Element) -> Result<Element, Error> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    /// The inverse `a^j b^i` in the inverse-semigroup sense.
    pub const fn inverse(self) -> Self {
        Element {
            i: self.j,
            j: self.i,
        }
    }

    /// Reflection in the main diagonal. This is an anti-isomorphism of the
    /// monoid; on elements it coincides with [`inverse`](Self::inverse).
    pub const fn hat(self) -> Self {
        Element {
            i: self.j,
            j: self.i,
        }
    }

    pub const fn is_idempotent(self) -> bool {
        self.i == self.j
    }

    /// Natural order on idempotents: answers `self <= other`.
    ///
    /// The idempotents form the chain `e_0 >= e_1 >= e_2 >= ...`, so
    /// `e_m <= e_n` exactly when `m >= n`.
    pub fn idempotent_leq(self, other: Element) -> Result<bool, Error> {
        for e in [self, other] {
            if !e.is_idempotent() {
                return Err(Error::NotIdempotent(e));
            }
        }
        Ok(self.i >= other.i)
    }

    /// Green's relations between `self` and `other`.
    pub fn green(self, other: Element) -> Green {
        let l = self.j == other.j;
        let r = self.i == other.i;
        Green {
            l,
            r,
            h: l && r,
            d: true,
        }
    }

    /// Product `self^{-1} other`, the shape every left I-quotient takes.
    pub fn left_quotient(self, other: Element) -> Option<Element> {
        self.inverse().checked_mul(other)
    }
}

impl Mul for Element {
    type Output = Element;

    /// Panics if a coordinate overflows `u64`; use
    /// [`Element::checked_mul`] to handle that case.
    fn mul(self, rhs: Element) -> Element {
        self.checked_mul(rhs)
            .unwrap_or_else(|| panic!("coordinate overflow in {self} * {rhs}"))
    }
}

/// Which of Green's relations hold between two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Green {
    pub l: bool,
    pub r: bool,
    pub h: bool,
    /// Always true: the bicyclic monoid is bisimple.
    pub d: bool,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Parses `(i,j)`; whitespace around the numbers is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::ElementSyntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let j = j.trim().parse().map_err(|_| bad())?;
        Ok(Element { i, j })
    }
}

/// Parses a comma-separated list of elements such as `(0,1),(2,3)`.
/// An empty or all-whitespace string yields an empty list.
pub fn parse_element_list(s: &str) -> Result<Vec<Element>, Error> {
    let s = s.trim();
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let close = rest
            .find(')')
            .ok_or_else(|| Error::ElementSyntax(rest.to_string()))?;
        out.push(rest[..=close].parse()?);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(Error::ElementSyntax(s.to_string()));
            }
        } else if !rest.is_empty() {
            return Err(Error::ElementSyntax(s.to_string()));
        }
    }
    Ok(out)
}
