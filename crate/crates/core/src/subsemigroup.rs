//! Finite descriptions of subsemigroups of the bicyclic monoid.
//!
//! Every subsemigroup is diagonal, upper, lower or two-sided, and each
//! shape is determined by a handful of parameters. [`SubsemigroupSpec`]
//! holds those parameters as plain data; [`Subsemigroup`] is a spec that
//! has passed [`SubsemigroupSpec::validate`] and answers membership
//! queries exactly.
//!
//! The parameters only describe the *shape* a subsemigroup must have. Not
//! every admissible tuple is closed under multiplication, so
//! [`Subsemigroup::closure_falsify`] provides a bounded check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::element::Element;
use crate::error::Error;
use crate::regions::{in_sigma, in_triangle, IndexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Diagonal,
    Upper,
    Lower,
    TwoSidedI,
    TwoSidedII,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Form::Diagonal => "diagonal",
            Form::Upper => "upper",
            Form::Lower => "lower",
            Form::TwoSidedI => "twosided-i",
            Form::TwoSidedII => "twosided-ii",
        }
    }

    /// The form of the reflected subsemigroup.
    pub fn hat(self) -> Form {
        match self {
            Form::Diagonal => Form::Diagonal,
            Form::Upper => Form::Lower,
            Form::Lower => Form::Upper,
            Form::TwoSidedI => Form::TwoSidedII,
            Form::TwoSidedII => Form::TwoSidedI,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Form {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Form::Diagonal,
            Form::Upper,
            Form::Lower,
            Form::TwoSidedI,
            Form::TwoSidedII,
        ]
        .into_iter()
        .find(|f| f.as_str() == s)
        .ok_or_else(|| format!("unknown form {s:?}"))
    }
}

/// `{(n,n) : n >= start, n ≡ residue (mod modulus)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagonalTail {
    pub start: u64,
    pub modulus: u64,
    pub residue: u64,
}

impl DiagonalTail {
    pub fn contains(&self, n: u64) -> bool {
        n >= self.start && self.modulus > 0 && n % self.modulus == self.residue
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DiagonalSpec {
    pub elements: BTreeSet<Element>,
    pub tail: Option<DiagonalTail>,
}

/// Per-row data for one explicitly listed row `i`: the row is
/// `F_i ∪ Λ_{i,m,d}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RowOverride {
    pub m: u64,
    pub extra: BTreeSet<Element>,
}

/// Row thresholds `m_i` and finite parts `F_i` for the rows in `I`.
///
/// Rows without an override use `m_i = max(i, default_m)` and `F_i = ∅`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RowData {
    pub default_m: u64,
    pub overrides: BTreeMap<u64, RowOverride>,
}

impl RowData {
    /// Normalized threshold `m_i`, never below `i`.
    pub fn threshold(&self, i: u64) -> u64 {
        let m = self.overrides.get(&i).map_or(self.default_m, |o| o.m);
        m.max(i)
    }

    /// The finite part `F_i`.
    pub fn extra(&self, i: u64) -> Option<&BTreeSet<Element>> {
        self.overrides.get(&i).map(|o| &o.extra)
    }

    pub fn max_override_m(&self) -> u64 {
        self.overrides.values().map(|o| o.m).max().unwrap_or(0)
    }
}

/// Parameters shared by the upper and lower forms:
/// `F_D ∪ ⋃_{i∈I} (F_i ∪ Λ_{i,m_i,d})` and its reflection.
///
/// The period `d` is the modulus of `index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowSpec {
    pub fd: BTreeSet<Element>,
    pub index: IndexSet,
    pub rows: RowData,
}

impl RowSpec {
    pub fn d(&self) -> u64 {
        self.index.modulus
    }

    /// Membership of `x` in `⋃_{i∈I} S_i` (upper orientation, `F_D` excluded).
    fn rows_contain(&self, x: Element) -> bool {
        if x.j < x.i || !self.index.contains(x.i) {
            return false;
        }
        if self.rows.extra(x.i).is_some_and(|f| f.contains(&x)) {
            return true;
        }
        x.j >= self.rows.threshold(x.i) && (x.j - x.i).is_multiple_of(self.d())
    }
}

/// Parameters of the two-sided forms
/// `F_D ∪ F ∪ Λ_{I,p,d} ∪ Σ_{p,d,P}` and `F_D ∪ F̂ ∪ Λ̂_{I,p,d} ∪ Σ_{p,d,P}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoSidedSpec {
    pub q: u64,
    pub p: u64,
    pub d: u64,
    /// `I ⊆ {q, …, p-1}`.
    pub rows: BTreeSet<u64>,
    /// `P ⊆ {0, …, d-1}`.
    pub offsets: BTreeSet<u64>,
    pub fd: BTreeSet<Element>,
    /// `F ⊆ T_{q,p}`, stored unreflected for both forms.
    pub f: BTreeSet<Element>,
}

impl TwoSidedSpec {
    /// Membership in the form-(i) set.
    fn contains_upper(&self, x: Element) -> bool {
        self.fd.contains(&x)
            || self.f.contains(&x)
            || (self.rows.contains(&x.i)
                && x.j >= self.p
                && x.j >= x.i
                && (x.j - x.i).is_multiple_of(self.d))
            || in_sigma(x, self.p, self.d, &self.offsets).unwrap_or(false)
    }
}

/// Parameter data for one of the five classification forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubsemigroupSpec {
    Diagonal(DiagonalSpec),
    Upper(RowSpec),
    Lower(RowSpec),
    TwoSidedI(TwoSidedSpec),
    TwoSidedII(TwoSidedSpec),
}

/// One failed constraint found by [`SubsemigroupSpec::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub parameter: String,
    pub constraint: String,
}

impl Violation {
    fn new(parameter: impl Into<String>, constraint: impl Into<String>) -> Self {
        Violation {
            parameter: parameter.into(),
            constraint: constraint.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.parameter, self.constraint)
    }
}

/// How `F_D ⊆ D ∩ L_k` is read when validating: `L_k` is taken as the left
/// strip `L^k`, i.e. diagonal elements `(n,n)` with `n <= k`.
pub const FD_READING: &str = "strip: F_D ⊆ {(n,n) : n <= k}";

fn check_fd(out: &mut Vec<Violation>, fd: &BTreeSet<Element>, bound: u64, bound_name: &str) {
    for &x in fd {
        if !x.is_idempotent() {
            out.push(Violation::new("FD", format!("{x} is not on the diagonal")));
        } else if x.i > bound {
            out.push(Violation::new(
                "FD",
                format!("{x} ∉ D ∩ L^{bound_name} (diagonal index must be <= {bound})"),
            ));
        }
    }
}

impl SubsemigroupSpec {
    pub fn form(&self) -> Form {
        match self {
            SubsemigroupSpec::Diagonal(_) => Form::Diagonal,
            SubsemigroupSpec::Upper(_) => Form::Upper,
            SubsemigroupSpec::Lower(_) => Form::Lower,
            SubsemigroupSpec::TwoSidedI(_) => Form::TwoSidedI,
            SubsemigroupSpec::TwoSidedII(_) => Form::TwoSidedII,
        }
    }

    /// Checks every structural constraint of the classification.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        match self {
            SubsemigroupSpec::Diagonal(s) => validate_diagonal(s, &mut out),
            SubsemigroupSpec::Upper(s) | SubsemigroupSpec::Lower(s) => validate_rows(s, &mut out),
            SubsemigroupSpec::TwoSidedI(s) | SubsemigroupSpec::TwoSidedII(s) => {
                validate_two_sided(s, &mut out)
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Reflection in the diagonal: upper and lower swap, the two two-sided
    /// forms swap, and the parameters are unchanged.
    pub fn hat(&self) -> SubsemigroupSpec {
        match self.clone() {
            SubsemigroupSpec::Diagonal(s) => SubsemigroupSpec::Diagonal(s),
            SubsemigroupSpec::Upper(s) => SubsemigroupSpec::Lower(s),
            SubsemigroupSpec::Lower(s) => SubsemigroupSpec::Upper(s),
            SubsemigroupSpec::TwoSidedI(s) => SubsemigroupSpec::TwoSidedII(s),
            SubsemigroupSpec::TwoSidedII(s) => SubsemigroupSpec::TwoSidedI(s),
        }
    }
}

fn validate_diagonal(s: &DiagonalSpec, out: &mut Vec<Violation>) {
    for &x in &s.elements {
        if !x.is_idempotent() {
            out.push(Violation::new(
                "elements",
                format!("{x} is not on the diagonal"),
            ));
        }
    }
    if let Some(t) = s.tail {
        if t.modulus == 0 {
            out.push(Violation::new("tail_d", "must be positive"));
        } else if t.residue >= t.modulus {
            out.push(Violation::new(
                "tail_r",
                format!("residue {} must be < tail_d = {}", t.residue, t.modulus),
            ));
        }
    }
}

fn validate_rows(s: &RowSpec, out: &mut Vec<Violation>) {
    let d = s.d();
    if d == 0 {
        out.push(Violation::new("d", "must be positive"));
        return;
    }
    let n = s.index.threshold;
    for &i in &s.index.finite {
        if i >= n {
            out.push(Violation::new(
                "I0",
                format!("I0 ⊆ {{0,…,N−1}} fails: {i} >= N = {n}"),
            ));
        }
    }
    for &r in &s.index.residues {
        if r >= d {
            out.push(Violation::new(
                "R",
                format!("R ⊆ {{0,…,d−1}} fails: {r} >= d = {d}"),
            ));
        }
    }
    match s.index.min() {
        None => out.push(Violation::new("I", "I is empty; use form=diagonal")),
        Some(min) => check_fd(out, &s.fd, min, "min(I)"),
    }
    for (&i, o) in &s.rows.overrides {
        if !s.index.contains(i) {
            out.push(Violation::new(format!("row {i}"), "row index is not in I"));
        }
        for &x in &o.extra {
            if x.i != i || x.j < i || (x.j - i) % d != 0 {
                out.push(Violation::new(
                    format!("row {i}"),
                    format!("F element {x} ∉ Λ_{{{i},{i},{d}}}"),
                ));
            }
        }
    }
}

fn validate_two_sided(s: &TwoSidedSpec, out: &mut Vec<Violation>) {
    let TwoSidedSpec { q, p, d, .. } = *s;
    if d == 0 {
        out.push(Violation::new("d", "must be positive"));
    }
    if q > p {
        out.push(Violation::new(
            "q",
            format!("q ≤ p fails: q = {q}, p = {p}"),
        ));
    }
    for &i in &s.rows {
        if i < q || i >= p {
            out.push(Violation::new("I", format!("I ⊆ {{q,…,p−1}} fails: {i}")));
        }
    }
    if !s.rows.contains(&q) {
        out.push(Violation::new("I", format!("q ∈ I fails: q = {q}")));
    }
    for &r in &s.offsets {
        if r >= d {
            out.push(Violation::new("P", format!("P ⊆ {{0,…,d−1}} fails: {r}")));
        }
    }
    if !s.offsets.contains(&0) {
        out.push(Violation::new("P", "0 ∈ P fails"));
    }
    check_fd(out, &s.fd, q, "q");
    if q <= p {
        for &x in &s.f {
            if !in_triangle(x, q, p).unwrap_or(false) {
                out.push(Violation::new("F", format!("{x} ∉ T_{{{q},{p}}}")));
            }
        }
    }
}

/// A [`SubsemigroupSpec`] whose parameters satisfy every constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subsemigroup(SubsemigroupSpec);

/// Outcome of the bounded closure check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// No failing pair inside the window. Evidence, not proof.
    NoCounterexample,
    /// `x` and `y` are members but `x·y` is not.
    Counterexample {
        x: Element,
        y: Element,
        product: Element,
    },
}

impl Subsemigroup {
    pub fn new(spec: SubsemigroupSpec) -> Result<Self, Error> {
        spec.validate().map_err(Error::Invalid)?;
        Ok(Subsemigroup(spec))
    }

    pub fn spec(&self) -> &SubsemigroupSpec {
        &self.0
    }

    pub fn into_spec(self) -> SubsemigroupSpec {
        self.0
    }

    pub fn form(&self) -> Form {
        self.0.form()
    }

    /// The period `d` (1 for diagonal subsemigroups).
    pub fn d(&self) -> u64 {
        match &self.0 {
            SubsemigroupSpec::Diagonal(_) => 1,
            SubsemigroupSpec::Upper(s) | SubsemigroupSpec::Lower(s) => s.d(),
            SubsemigroupSpec::TwoSidedI(s) | SubsemigroupSpec::TwoSidedII(s) => s.d,
        }
    }

    /// `p + default_m + (largest override m)`, with absent parameters
    /// counted as zero. Witness coordinates, and therefore the pair windows
    /// used by the coverage oracle, grow with this quantity.
    pub fn extent(&self) -> u64 {
        match &self.0 {
            SubsemigroupSpec::Diagonal(_) => 0,
            SubsemigroupSpec::Upper(s) | SubsemigroupSpec::Lower(s) => {
                s.rows.default_m.saturating_add(s.rows.max_override_m())
            }
            SubsemigroupSpec::TwoSidedI(s) | SubsemigroupSpec::TwoSidedII(s) => s.p,
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        match &self.0 {
            SubsemigroupSpec::Diagonal(s) => {
                x.is_idempotent()
                    && (s.elements.contains(&x) || s.tail.is_some_and(|t| t.contains(x.i)))
            }
            SubsemigroupSpec::Upper(s) => s.fd.contains(&x) || s.rows_contain(x),
            SubsemigroupSpec::Lower(s) => s.fd.contains(&x) || s.rows_contain(x.hat()),
            SubsemigroupSpec::TwoSidedI(s) => s.contains_upper(x),
            // F_D and Σ are symmetric, so form (ii) is form (i) reflected.
            SubsemigroupSpec::TwoSidedII(s) => s.contains_upper(x.hat()),
        }
    }

    /// All members with both coordinates at most `w`.
    pub fn enumerate_window(&self, w: u64) -> BTreeSet<Element> {
        self.enumerate_rect(w, w)
    }

    /// All members `(i,j)` with `i <= max_i` and `j <= max_j`.
    pub fn enumerate_rect(&self, max_i: u64, max_j: u64) -> BTreeSet<Element> {
        (0..=max_i)
            .flat_map(|i| (0..=max_j).map(move |j| Element::new(i, j)))
            .filter(|&x| self.contains(x))
            .collect()
    }

    /// Searches the window for members `x`, `y` with `x·y` outside the set.
    /// Pairs are tried in increasing order, so the first failure is reported.
    pub fn closure_falsify(&self, w: u64) -> Closure {
        let members = self.enumerate_window(w);
        for &x in &members {
            for &y in &members {
                let product = x * y;
                if !self.contains(product) {
                    return Closure::Counterexample { x, y, product };
                }
            }
        }
        Closure::NoCounterexample
    }

    pub fn hat(&self) -> Subsemigroup {
        Subsemigroup(self.0.hat())
    }
}

impl TryFrom<SubsemigroupSpec> for Subsemigroup {
    type Error = Error;

    fn try_from(spec: SubsemigroupSpec) -> Result<Self, Error> {
        Subsemigroup::new(spec)
    }
}

/// Constructors for the named examples used throughout the crate and its
/// tests.
pub mod named {
    use super::*;

    fn row_spec(index: IndexSet, default_m: u64) -> RowSpec {
        RowSpec {
            fd: BTreeSet::new(),
            index,
            rows: RowData {
                default_m,
                overrides: BTreeMap::new(),
            },
        }
    }

    /// `R_1 = {(0,j) : j >= 0}`, the R-class of the identity.
    pub fn r1() -> SubsemigroupSpec {
        SubsemigroupSpec::Upper(row_spec(IndexSet::finite([0]), 0))
    }

    /// `B⁺ = {(i,j) : j >= i}`.
    pub fn b_plus() -> SubsemigroupSpec {
        SubsemigroupSpec::Upper(row_spec(IndexSet::all(1), 0))
    }

    /// `T = {(i,j) : i >= j, i >= m}`.
    pub fn lower_t(m: u64) -> SubsemigroupSpec {
        SubsemigroupSpec::Lower(row_spec(IndexSet::all(1), m))
    }

    /// `{(i,0) : i >= 0}`.
    pub fn lower_column0() -> SubsemigroupSpec {
        SubsemigroupSpec::Lower(row_spec(IndexSet::finite([0]), 0))
    }

    /// `{(i,j) : j >= i, d | j - i}`.
    pub fn upper_periodic(d: u64) -> SubsemigroupSpec {
        SubsemigroupSpec::Upper(row_spec(IndexSet::all(d), 0))
    }

    pub fn diagonal(indices: impl IntoIterator<Item = u64>) -> SubsemigroupSpec {
        SubsemigroupSpec::Diagonal(DiagonalSpec {
            elements: indices.into_iter().map(Element::idempotent).collect(),
            tail: None,
        })
    }

    /// Form (ii) with `q = 0`, `d = 1`, `P = {0}` and no finite parts.
    pub fn two_sided_ii(p: u64, rows: impl IntoIterator<Item = u64>) -> SubsemigroupSpec {
        SubsemigroupSpec::TwoSidedII(TwoSidedSpec {
            q: 0,
            p,
            d: 1,
            rows: rows.into_iter().collect(),
            offsets: [0].into(),
            fd: BTreeSet::new(),
            f: BTreeSet::new(),
        })
    }
}
