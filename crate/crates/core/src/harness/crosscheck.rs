//! Cross-validation of a decision against the coverage oracle.

use crate::element::Element;
use crate::harness::coverage::{coverage, CoverageReport};
use crate::iorder::{decide_left_iorder, Decision};
use crate::subsemigroup::{Closure, Subsemigroup};

#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub decision: Decision,
    pub coverage: CoverageReport,
    /// For a negative verdict whose certificate element fits the window:
    /// whether that element is among the coverage gaps.
    pub certificate_in_gaps: Option<bool>,
    /// Bounded closure check on the same window.
    pub closure: Closure,
}

impl CrossCheck {
    /// A positive verdict passes when the window has no gaps; a negative
    /// one passes when its certificate element (if it fits) is a gap.
    pub fn passed(&self) -> bool {
        if self.decision.is_yes() {
            self.coverage.gaps.is_empty()
        } else {
            self.certificate_in_gaps != Some(false)
        }
    }

    pub fn record(&self) -> Vec<(String, String)> {
        let mut out = vec![
            (
                "result".into(),
                if self.passed() { "PASS" } else { "FAIL" }.into(),
            ),
            ("window".into(), self.coverage.window.to_string()),
            ("pairs".into(), self.coverage.pair_bound.to_string()),
            (
                "verdict".into(),
                if self.decision.is_yes() { "yes" } else { "no" }.into(),
            ),
            ("covered".into(), self.coverage.covered.len().to_string()),
            ("gaps".into(), self.coverage.gaps.len().to_string()),
        ];
        let evidence = match (self.decision.uncovered(), self.certificate_in_gaps) {
            _ if self.decision.is_yes() => {
                "every window element decomposes (evidence, not proof)".to_string()
            }
            (Some(u), Some(true)) => format!(
                "certificate {} absent from coverage (evidence, not proof)",
                u.element
            ),
            (Some(u), Some(false)) => format!(
                "certificate {} is covered: decision contradicted",
                u.element
            ),
            (Some(u), None) => format!(
                "certificate {} lies outside the window (unchecked)",
                u.element
            ),
            (None, _) => "no certificate element (unchecked)".to_string(),
        };
        out.push(("evidence".into(), evidence));
        out.push((
            "closure".into(),
            match self.closure {
                Closure::NoCounterexample => "ok".into(),
                Closure::Counterexample { x, y, product } => {
                    format!("counterexample {x}*{y}={product}")
                }
            },
        ));
        out
    }
}

fn fits(x: Element, w: u64) -> bool {
    x.i <= w && x.j <= w
}

pub fn cross_validate(s: &Subsemigroup, window: u64) -> CrossCheck {
    let decision = decide_left_iorder(s);
    let coverage = coverage(s, window);
    let certificate_in_gaps = decision
        .uncovered()
        .filter(|u| fits(u.element, window))
        .map(|u| coverage.gaps.contains(&u.element));
    CrossCheck {
        decision,
        coverage,
        certificate_in_gaps,
        closure: s.closure_falsify(window),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsemigroup::named::*;

    #[test]
    fn examples_pass() {
        let r = cross_validate(&Subsemigroup::new(r1()).unwrap(), 6);
        assert!(r.passed());

        let r = cross_validate(&Subsemigroup::new(lower_column0()).unwrap(), 4);
        assert!(r.passed());
        assert_eq!(r.certificate_in_gaps, Some(true));
        assert!(r.coverage.gaps.contains(&Element::new(1, 1)));

        let r = cross_validate(&Subsemigroup::new(two_sided_ii(2, [0, 1])).unwrap(), 6);
        assert!(r.passed());
        assert!(r.coverage.gaps.is_empty());
        assert_eq!(r.closure, Closure::NoCounterexample);
    }

    #[test]
    fn record_mentions_evidence() {
        let r = cross_validate(&Subsemigroup::new(lower_column0()).unwrap(), 4);
        let rec = r.record();
        assert_eq!(rec[0], ("result".to_string(), "PASS".to_string()));
        assert!(rec
            .iter()
            .any(|(k, v)| k == "evidence" && v.contains("(1,1)") && v.contains("not proof")));
    }
}
