//! Deciding whether a subsemigroup is a left (or right) I-order in the
//! bicyclic monoid, i.e. whether every element of the monoid can be written
//! as `x⁻¹y` (respectively `xy⁻¹`) with `x, y` in the subsemigroup.
//!
//! Each classification form has its own criterion stated in terms of the
//! finite parameter data. A negative answer carries a certificate: the
//! first condition that fails and, whenever one can be named, a concrete
//! element of the monoid that has no such decomposition.

use std::fmt;

use crate::element::Element;
use crate::subsemigroup::{Form, RowSpec, Subsemigroup, SubsemigroupSpec, TwoSidedSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A named condition in one of the per-form criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The subsemigroup is not contained in the diagonal.
    NotDiagonal,
    /// `d = 1`.
    PeriodIsOne,
    /// `0 ∈ I`.
    ZeroInRows,
    /// `F_D ∪ F_0 ⊇ {(0,0), …, (0, m_0 - 1)}`.
    RowZeroPrefixCovered,
    /// `q = 0`.
    QIsZero,
    /// `(0,j) ∈ S` for `0 <= j <= p + 1`.
    RowZeroThroughP,
    /// `I = N^0`.
    RowsAreEverything,
    /// `I = {0, …, p-1}`.
    RowsArePrefix,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::NotDiagonal => "not_diagonal",
            Condition::PeriodIsOne => "d_is_1",
            Condition::ZeroInRows => "zero_in_I",
            Condition::RowZeroPrefixCovered => "row0_prefix_in_FD_or_F0",
            Condition::QIsZero => "q_is_0",
            Condition::RowZeroThroughP => "row0_through_p_plus_1",
            Condition::RowsAreEverything => "I_is_all_naturals",
            Condition::RowsArePrefix => "I_is_0_to_p_minus_1",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Condition::NotDiagonal => "S is not contained in the diagonal",
            Condition::PeriodIsOne => "d = 1",
            Condition::ZeroInRows => "0 ∈ I",
            Condition::RowZeroPrefixCovered => "F_D ∪ F_0 ⊇ {(0,0),…,(0,m_0−1)}",
            Condition::QIsZero => "q = 0",
            Condition::RowZeroThroughP => "(0,j) ∈ S for 0 ≤ j ≤ p+1",
            Condition::RowsAreEverything => "I = N^0",
            Condition::RowsArePrefix => "I = {0,…,p−1}",
        }
    }
}

/// Why a certificate element has no decomposition `x⁻¹y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Every member has `d | j - i`, and so does every `x⁻¹y`.
    Parity,
    /// The element is `(k,k)` and no member lies in column `k`.
    EmptyLClass,
    /// The element `(0,h)` is not a member; any `x⁻¹y` in row 0 forces
    /// `x = 1` and `y = (0,h)`.
    RowZeroGap,
    /// Column 0 of `S` is at most `{(0,0)}`, so `(1,0)` needs a member
    /// `(m,0)` with `m >= 1` that does not exist.
    ColumnZeroGap,
    /// `S` consists of idempotents, so every `x⁻¹y` is idempotent.
    IdempotentsOnly,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Parity => "parity",
            Reason::EmptyLClass => "empty-L-class",
            Reason::RowZeroGap => "row0-gap",
            Reason::ColumnZeroGap => "column0-gap",
            Reason::IdempotentsOnly => "idempotents-only",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Uncovered {
    pub element: Element,
    pub reason: Reason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub failed: Condition,
    pub uncovered: Option<Uncovered>,
}

/// Result of a decision procedure.
///
/// The verdict is derived from `conditions`; a certificate is present
/// exactly when some condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decision {
    pub side: Side,
    pub form: Form,
    pub conditions: Vec<(Condition, bool)>,
    pub certificate: Option<Certificate>,
}

impl Decision {
    fn new(
        form: Form,
        conditions: Vec<(Condition, bool)>,
        uncovered: impl FnOnce() -> Option<Uncovered>,
    ) -> Self {
        let certificate = conditions
            .iter()
            .find(|(_, holds)| !holds)
            .map(|&(failed, _)| Certificate {
                failed,
                uncovered: uncovered(),
            });
        Decision {
            side: Side::Left,
            form,
            conditions,
            certificate,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.conditions.iter().all(|&(_, holds)| holds)
    }

    pub fn uncovered(&self) -> Option<Uncovered> {
        self.certificate.and_then(|c| c.uncovered)
    }

    /// One-line summary, e.g. `left I-order: no (d = 1 fails; (0,1) parity)`.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} I-order: {}",
            self.side.as_str(),
            if self.is_yes() { "yes" } else { "no" }
        );
        if let Some(c) = self.certificate {
            s.push_str(&format!(" ({} fails", c.failed.describe()));
            if let Some(u) = c.uncovered {
                s.push_str(&format!("; {} {}", u.element, u.reason.as_str()));
            }
            s.push(')');
        }
        s
    }

    /// Machine-readable `key=value` record.
    pub fn record(&self) -> Vec<(String, String)> {
        let mut out = vec![
            (
                "verdict".into(),
                if self.is_yes() { "yes" } else { "no" }.into(),
            ),
            ("side".into(), self.side.as_str().into()),
            ("form".into(), self.form.as_str().into()),
        ];
        for (c, holds) in &self.conditions {
            out.push((format!("condition.{}", c.as_str()), holds.to_string()));
        }
        if let Some(c) = self.certificate {
            out.push(("certificate.failed".into(), c.failed.as_str().into()));
            if let Some(u) = c.uncovered {
                out.push(("certificate.element".into(), u.element.to_string()));
                out.push(("certificate.reason".into(), u.reason.as_str().into()));
            }
        }
        out
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({} subsemigroup)", self.summary(), self.form)?;
        for (c, holds) in &self.conditions {
            writeln!(f, "  [{}] {}", if *holds { "x" } else { " " }, c.describe())?;
        }
        Ok(())
    }
}

/// Decides whether `s` is a left I-order in the bicyclic monoid.
pub fn decide_left_iorder(s: &Subsemigroup) -> Decision {
    match s.spec() {
        SubsemigroupSpec::Diagonal(_) => Decision::new(
            Form::Diagonal,
            vec![(Condition::NotDiagonal, false)],
            || {
                Some(Uncovered {
                    element: Element::B,
                    reason: Reason::IdempotentsOnly,
                })
            },
        ),
        SubsemigroupSpec::Upper(rs) => decide_upper(s, rs),
        SubsemigroupSpec::Lower(rs) => decide_lower(rs),
        SubsemigroupSpec::TwoSidedI(ts) => decide_two_sided_i(s, ts),
        SubsemigroupSpec::TwoSidedII(ts) => decide_two_sided_ii(ts),
    }
}

/// Decides whether `s` is a right I-order, via its reflection: `s` is a
/// right I-order iff `hat(s)` is a left one. The certificate element is
/// reflected back, so it is an element with no decomposition `xy⁻¹` over `s`.
pub fn decide_right_iorder(s: &Subsemigroup) -> Decision {
    let mut d = decide_left_iorder(&hat_spec(s));
    d.side = Side::Right;
    d.form = s.form();
    if let Some(Certificate {
        uncovered: Some(u), ..
    }) = &mut d.certificate
    {
        u.element = u.element.hat();
    }
    d
}

/// Reflection of a subsemigroup in the diagonal.
pub fn hat_spec(s: &Subsemigroup) -> Subsemigroup {
    s.hat()
}

fn parity() -> Option<Uncovered> {
    Some(Uncovered {
        element: Element::B,
        reason: Reason::Parity,
    })
}

/// Least `(0,h)` outside `s`, searched up to `limit`.
fn row_zero_gap(s: &Subsemigroup, limit: u64) -> Option<Uncovered> {
    (0..=limit)
        .map(|h| Element::new(0, h))
        .find(|&x| !s.contains(x))
        .map(|element| Uncovered {
            element,
            reason: Reason::RowZeroGap,
        })
}

fn decide_upper(s: &Subsemigroup, rs: &RowSpec) -> Decision {
    let d_is_one = rs.d() == 1;
    let zero_in_rows = rs.index.contains(0);
    let m0 = rs.rows.threshold(0);
    let prefix = zero_in_rows
        && (0..m0).all(|j| {
            let x = Element::new(0, j);
            rs.fd.contains(&x) || rs.rows.extra(0).is_some_and(|f| f.contains(&x))
        });
    Decision::new(
        Form::Upper,
        vec![
            (Condition::PeriodIsOne, d_is_one),
            (Condition::ZeroInRows, zero_in_rows),
            (Condition::RowZeroPrefixCovered, prefix),
        ],
        || {
            if !d_is_one {
                parity()
            } else {
                row_zero_gap(s, m0.max(1))
            }
        },
    )
}

fn decide_lower(rs: &RowSpec) -> Decision {
    let d_is_one = rs.d() == 1;
    let everything = rs.index.is_everything();
    Decision::new(
        Form::Lower,
        vec![
            (Condition::PeriodIsOne, d_is_one),
            (Condition::RowsAreEverything, everything),
        ],
        || {
            if !d_is_one {
                return parity();
            }
            // Column k of S is empty when k ∉ I and (k,k) ∉ F_D. Gaps of I
            // are either finite in number or recur forever, while F_D is
            // finite, so this search terminates.
            let empty_column = rs
                .index
                .missing()
                .find(|&k| !rs.fd.contains(&Element::idempotent(k)));
            Some(match empty_column {
                Some(k) => Uncovered {
                    element: Element::idempotent(k),
                    reason: Reason::EmptyLClass,
                },
                // Every gap of I is filled by F_D, which forces 0 ∉ I and
                // leaves (0,0) alone in column 0.
                None => Uncovered {
                    element: Element::A,
                    reason: Reason::ColumnZeroGap,
                },
            })
        },
    )
}

/// `d | j - i` for every element of the finite parts, so the parity
/// argument applies to the whole set.
fn finite_parts_respect_period(ts: &TwoSidedSpec) -> bool {
    ts.f.iter()
        .chain(&ts.fd)
        .all(|x| x.j >= x.i && (x.j - x.i) % ts.d == 0)
}

fn decide_two_sided_i(s: &Subsemigroup, ts: &TwoSidedSpec) -> Decision {
    let d_is_one = ts.d == 1;
    let q_is_zero = ts.q == 0;
    let reach = ts.p.saturating_add(1);
    let row_zero = (0..=reach).all(|j| s.contains(Element::new(0, j)));
    Decision::new(
        Form::TwoSidedI,
        vec![
            (Condition::PeriodIsOne, d_is_one),
            (Condition::QIsZero, q_is_zero),
            (Condition::RowZeroThroughP, row_zero),
        ],
        || {
            if !d_is_one {
                finite_parts_respect_period(ts).then(parity).flatten()
            } else {
                row_zero_gap(s, reach)
            }
        },
    )
}

fn decide_two_sided_ii(ts: &TwoSidedSpec) -> Decision {
    let d_is_one = ts.d == 1;
    let prefix = ts.rows.len() as u64 == ts.p && (0..ts.p).all(|i| ts.rows.contains(&i));
    Decision::new(
        Form::TwoSidedII,
        vec![
            (Condition::PeriodIsOne, d_is_one),
            (Condition::RowsArePrefix, prefix),
        ],
        || {
            if !d_is_one {
                return finite_parts_respect_period(ts).then(parity).flatten();
            }
            // Below p, column m meets S only through I, F̂ or (m,m) ∈ F_D.
            let empty_column = (0..ts.p).find(|&m| {
                !ts.rows.contains(&m)
                    && !ts.fd.contains(&Element::idempotent(m))
                    && !ts.f.iter().any(|x| x.i == m)
            });
            match empty_column {
                Some(m) => Some(Uncovered {
                    element: Element::idempotent(m),
                    reason: Reason::EmptyLClass,
                }),
                // With q > 0, row 0 of S is at most {(0,0)} and column 0
                // is at most {(0,0)}, so (0,1) has no decomposition.
                None if ts.q > 0 => Some(Uncovered {
                    element: Element::B,
                    reason: Reason::RowZeroGap,
                }),
                None => None,
            }
        },
    )
}
