//! Straight decompositions `q = x⁻¹y` with `x R y`.
//!
//! Each positive decision comes with an explicit formula for `x` and `y`;
//! [`decompose`] evaluates it and [`verify_witness`] re-checks every
//! property from scratch, including the product via word rewriting.

use std::fmt;

use crate::element::Element;
use crate::error::Error;
use crate::iorder::decide_left_iorder;
use crate::rewrite::multiply_via_rewriting;
use crate::subsemigroup::{Subsemigroup, SubsemigroupSpec};

/// Which formula produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `(m,n) = (0,m)⁻¹ (0,n)`, available whenever `R_1 ⊆ S`.
    Row0,
    /// `(m,n) = (m+n+t, m)⁻¹ (m+n+t, n)` with `t = max(m_m, m_n)`.
    Lower,
    /// `(m,n) = (p+m+n, m)⁻¹ (p+m+n, n)`.
    TwoSidedII,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::Row0 => "row0",
            Scheme::Lower => "lower",
            Scheme::TwoSidedII => "twosided-ii",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub q: Element,
    pub x: Element,
    pub y: Element,
    pub scheme: Scheme,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} x={} y={} scheme={}",
            self.q,
            self.x,
            self.y,
            self.scheme.as_str()
        )
    }
}

fn add3(a: u64, b: u64, c: u64) -> Result<u64, Error> {
    a.checked_add(b)
        .and_then(|s| s.checked_add(c))
        .ok_or(Error::Overflow)
}

/// Writes `q` as `x⁻¹y` with `x, y ∈ s` and `x R y`.
///
/// Fails with [`Error::NotLeftIOrder`] when `s` is not a left I-order.
pub fn decompose(s: &Subsemigroup, q: Element) -> Result<Witness, Error> {
    let decision = decide_left_iorder(s);
    if !decision.is_yes() {
        return Err(Error::NotLeftIOrder(Box::new(decision)));
    }
    let (m, n) = (q.i, q.j);
    let (row, scheme) = match s.spec() {
        SubsemigroupSpec::Upper(_) | SubsemigroupSpec::TwoSidedI(_) => (0, Scheme::Row0),
        SubsemigroupSpec::Lower(rs) => {
            let t = rs.rows.threshold(m).max(rs.rows.threshold(n));
            (add3(m, n, t)?, Scheme::Lower)
        }
        SubsemigroupSpec::TwoSidedII(ts) => (add3(ts.p, m, n)?, Scheme::TwoSidedII),
        SubsemigroupSpec::Diagonal(_) => {
            unreachable!("diagonal subsemigroups are never left I-orders")
        }
    };
    Ok(Witness {
        q,
        x: Element::new(row, m),
        y: Element::new(row, n),
        scheme,
    })
}

/// Checks membership of `x` and `y`, the product `x⁻¹y = q` (by the closed
/// formula and by rewriting) and `x R y`.
///
/// Rewriting materializes words, so memory use is linear in the witness
/// coordinates.
pub fn verify_witness(s: &Subsemigroup, w: &Witness) -> bool {
    s.contains(w.x)
        && s.contains(w.y)
        && w.x.inverse().checked_mul(w.y) == Some(w.q)
        && multiply_via_rewriting(w.x.inverse(), w.y) == w.q
        && w.x.green(w.y).r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsemigroup::named::*;

    fn e(i: u64, j: u64) -> Element {
        Element::new(i, j)
    }

    fn sg(spec: SubsemigroupSpec) -> Subsemigroup {
        Subsemigroup::new(spec).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let w = decompose(&sg(r1()), e(3, 5)).unwrap();
        assert_eq!((w.x, w.y, w.scheme), (e(0, 3), e(0, 5), Scheme::Row0));

        let t = sg(lower_t(2));
        let w = decompose(&t, e(1, 0)).unwrap();
        assert_eq!((w.x, w.y, w.scheme), (e(3, 1), e(3, 0), Scheme::Lower));
        assert_eq!(e(1, 3) * e(3, 0), e(1, 0));
        assert!(verify_witness(&t, &w));

        let s = sg(two_sided_ii(2, [0, 1]));
        let w = decompose(&s, e(1, 1)).unwrap();
        assert_eq!((w.x, w.y, w.scheme), (e(4, 1), e(4, 1), Scheme::TwoSidedII));
        assert_eq!(e(1, 4) * e(4, 1), e(1, 1));
        assert!(verify_witness(&s, &w));

        let w = decompose(&sg(b_plus()), e(2, 2)).unwrap();
        assert_eq!((w.x, w.y), (e(0, 2), e(0, 2)));
        assert_eq!(e(2, 0) * e(0, 2), e(2, 2));
    }

    #[test]
    fn verify_examples() {
        let r1 = sg(r1());
        let w = |x, y| Witness {
            q: e(3, 5),
            x,
            y,
            scheme: Scheme::Row0,
        };
        assert!(verify_witness(&r1, &w(e(0, 3), e(0, 5))));
        assert!(!verify_witness(&r1, &w(e(0, 3), e(1, 5))));
        assert!(!verify_witness(&r1, &w(e(0, 4), e(0, 5))));
    }

    #[test]
    fn refuses_non_iorders() {
        let err = decompose(&sg(lower_column0()), e(0, 0)).unwrap_err();
        match err {
            Error::NotLeftIOrder(d) => assert!(!d.is_yes()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn witness_display() {
        let w = decompose(&sg(r1()), e(3, 5)).unwrap();
        assert_eq!(w.to_string(), "q=(3,5) x=(0,3) y=(0,5) scheme=row0");
    }

    #[test]
    fn overflow_is_an_error() {
        let err = decompose(&sg(two_sided_ii(2, [0, 1])), e(u64::MAX, 1)).unwrap_err();
        assert!(matches!(err, Error::Overflow));
    }
}
