//! The line-oriented `key=value` spec file format.
//!
//! ```text
//! # R_1, the R-class of the identity
//! form=upper
//! d=1
//! N=1
//! I0=0
//! row=0 m=0 F=
//! ```
//!
//! `#` starts a comment. A line beginning with `row=<i>` describes one row
//! override and may carry `m=<int>` and `F=<elements>`; every other line
//! holds top-level keys. Several `key=value` pairs may share a line.
//! Unknown keys, keys the form does not use, and repeated keys are errors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::element::{parse_element_list, Element};
use crate::error::Error;
use crate::regions::IndexSet;
use crate::subsemigroup::{
    DiagonalSpec, DiagonalTail, Form, RowData, RowOverride, RowSpec, Subsemigroup,
    SubsemigroupSpec, TwoSidedSpec,
};

const TOP_LEVEL_KEYS: &[&str] = &[
    "form",
    "d",
    "q",
    "p",
    "I",
    "I0",
    "R",
    "N",
    "P",
    "FD",
    "F",
    "default_m",
    "elements",
    "tail_N",
    "tail_d",
    "tail_r",
];

fn keys_for(form: Form) -> &'static [&'static str] {
    match form {
        Form::Diagonal => &["form", "elements", "tail_N", "tail_d", "tail_r"],
        Form::Upper | Form::Lower => &["form", "d", "I0", "R", "N", "FD", "default_m"],
        Form::TwoSidedI | Form::TwoSidedII => &["form", "d", "q", "p", "I", "P", "FD", "F"],
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits a line into `key=value` pairs. Fragments without `=` are glued
/// onto the previous value so that `F=(0, 1)` survives whitespace.
fn pairs(line_no: usize, line: &str) -> Result<Vec<(&str, String)>, Error> {
    let mut out: Vec<(&str, String)> = Vec::new();
    for token in line.split_whitespace() {
        match token.split_once('=') {
            Some((key, value)) if !key.contains('(') => out.push((key, value.to_string())),
            _ => match out.last_mut() {
                Some((_, value)) => value.push_str(token),
                None => return Err(err(line_no, format!("expected key=value, found {token:?}"))),
            },
        }
    }
    Ok(out)
}

fn int(line: usize, key: &str, value: &str) -> Result<u64, Error> {
    value.trim().parse().map_err(|_| {
        err(
            line,
            format!("{key}: expected a nonnegative integer, found {value:?}"),
        )
    })
}

fn ints(line: usize, key: &str, value: &str) -> Result<BTreeSet<u64>, Error> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|v| int(line, key, v))
        .collect()
}

fn elements(line: usize, key: &str, value: &str) -> Result<BTreeSet<Element>, Error> {
    parse_element_list(value)
        .map(|v| v.into_iter().collect())
        .map_err(|e| err(line, format!("{key}: {e}")))
}

struct Row {
    line: usize,
    index: u64,
    m: Option<u64>,
    extra: BTreeSet<Element>,
}

#[derive(Default)]
struct Raw {
    values: BTreeMap<String, (usize, String)>,
    rows: Vec<Row>,
}

impl Raw {
    fn get(&self, key: &str) -> Option<(usize, &str)> {
        self.values.get(key).map(|(l, v)| (*l, v.as_str()))
    }

    fn int_or(&self, key: &str, default: u64) -> Result<u64, Error> {
        self.get(key).map_or(Ok(default), |(l, v)| int(l, key, v))
    }

    fn required_int(&self, key: &str) -> Result<u64, Error> {
        let (l, v) = self
            .get(key)
            .ok_or_else(|| err(0, format!("missing required key {key}")))?;
        int(l, key, v)
    }

    fn ints(&self, key: &str) -> Result<BTreeSet<u64>, Error> {
        self.get(key)
            .map_or(Ok(BTreeSet::new()), |(l, v)| ints(l, key, v))
    }

    fn elements(&self, key: &str) -> Result<BTreeSet<Element>, Error> {
        self.get(key)
            .map_or(Ok(BTreeSet::new()), |(l, v)| elements(l, key, v))
    }
}

fn read(text: &str) -> Result<Raw, Error> {
    let mut raw = Raw::default();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = line.split('#').next().unwrap_or("");
        let kvs = pairs(line_no, content)?;
        let Some(((first_key, first_value), rest)) = kvs.split_first() else {
            continue;
        };
        if *first_key == "row" {
            let mut row = Row {
                line: line_no,
                index: int(line_no, "row", first_value)?,
                m: None,
                extra: BTreeSet::new(),
            };
            let mut seen = BTreeSet::new();
            for (key, value) in rest {
                if !seen.insert(*key) {
                    return Err(err(line_no, format!("repeated key {key} in row")));
                }
                match *key {
                    "m" => row.m = Some(int(line_no, key, value)?),
                    "F" => row.extra = elements(line_no, key, value)?,
                    other => {
                        return Err(err(
                            line_no,
                            format!("unknown row key {other:?} (expected m or F)"),
                        ))
                    }
                }
            }
            raw.rows.push(row);
            continue;
        }
        for (key, value) in kvs {
            if !TOP_LEVEL_KEYS.contains(&key) {
                return Err(err(line_no, format!("unknown key {key:?}")));
            }
            if let Some((prev, _)) = raw.values.insert(key.to_string(), (line_no, value)) {
                return Err(err(
                    line_no,
                    format!("key {key} already set on line {prev}"),
                ));
            }
        }
    }
    Ok(raw)
}

/// Parses spec text without validating the parameters.
pub fn parse_spec_unvalidated(text: &str) -> Result<SubsemigroupSpec, Error> {
    let raw = read(text)?;
    let (form_line, form) = raw
        .get("form")
        .ok_or_else(|| err(0, "missing required key form"))?;
    let form: Form = form.trim().parse().map_err(|e: String| err(form_line, e))?;
    let allowed = keys_for(form);
    for (key, (line, _)) in &raw.values {
        if !allowed.contains(&key.as_str()) {
            return Err(err(*line, format!("key {key} is not used by form={form}")));
        }
    }
    if !matches!(form, Form::Upper | Form::Lower) {
        if let Some(row) = raw.rows.first() {
            return Err(err(
                row.line,
                format!("row lines are not used by form={form}"),
            ));
        }
    }

    Ok(match form {
        Form::Diagonal => {
            let tail_keys = ["tail_N", "tail_d", "tail_r"];
            let tail = if tail_keys.iter().any(|k| raw.get(k).is_some()) {
                Some(DiagonalTail {
                    start: raw.int_or("tail_N", 0)?,
                    modulus: raw.int_or("tail_d", 1)?,
                    residue: raw.int_or("tail_r", 0)?,
                })
            } else {
                None
            };
            SubsemigroupSpec::Diagonal(DiagonalSpec {
                elements: raw.elements("elements")?,
                tail,
            })
        }
        Form::Upper | Form::Lower => {
            let d = raw.int_or("d", 1)?;
            let default_m = raw.int_or("default_m", 0)?;
            let mut overrides = BTreeMap::new();
            for row in &raw.rows {
                let o = RowOverride {
                    m: row.m.unwrap_or(default_m),
                    extra: row.extra.clone(),
                };
                if overrides.insert(row.index, o).is_some() {
                    return Err(err(row.line, format!("row {} listed twice", row.index)));
                }
            }
            let spec = RowSpec {
                fd: raw.elements("FD")?,
                index: IndexSet {
                    finite: raw.ints("I0")?,
                    residues: raw.ints("R")?,
                    threshold: raw.int_or("N", 0)?,
                    modulus: d,
                },
                rows: RowData {
                    default_m,
                    overrides,
                },
            };
            if form == Form::Upper {
                SubsemigroupSpec::Upper(spec)
            } else {
                SubsemigroupSpec::Lower(spec)
            }
        }
        Form::TwoSidedI | Form::TwoSidedII => {
            let spec = TwoSidedSpec {
                q: raw.required_int("q")?,
                p: raw.required_int("p")?,
                d: raw.int_or("d", 1)?,
                rows: raw.ints("I")?,
                offsets: match raw.get("P") {
                    Some(_) => raw.ints("P")?,
                    None => [0].into(),
                },
                fd: raw.elements("FD")?,
                f: raw.elements("F")?,
            };
            if form == Form::TwoSidedI {
                SubsemigroupSpec::TwoSidedI(spec)
            } else {
                SubsemigroupSpec::TwoSidedII(spec)
            }
        }
    })
}

/// Parses and validates spec text.
pub fn parse_spec(text: &str) -> Result<Subsemigroup, Error> {
    Subsemigroup::new(parse_spec_unvalidated(text)?)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Writes the spec in canonical file form; [`parse_spec_unvalidated`]
/// reads it back to an equal value.
impl fmt::Display for SubsemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "form={}", self.form())?;
        match self {
            SubsemigroupSpec::Diagonal(s) => {
                writeln!(f, "elements={}", join(&s.elements))?;
                if let Some(t) = s.tail {
                    writeln!(f, "tail_N={}", t.start)?;
                    writeln!(f, "tail_d={}", t.modulus)?;
                    writeln!(f, "tail_r={}", t.residue)?;
                }
            }
            SubsemigroupSpec::Upper(s) | SubsemigroupSpec::Lower(s) => {
                writeln!(f, "d={}", s.index.modulus)?;
                writeln!(f, "N={}", s.index.threshold)?;
                writeln!(f, "I0={}", join(&s.index.finite))?;
                writeln!(f, "R={}", join(&s.index.residues))?;
                writeln!(f, "FD={}", join(&s.fd))?;
                writeln!(f, "default_m={}", s.rows.default_m)?;
                for (i, o) in &s.rows.overrides {
                    writeln!(f, "row={i} m={} F={}", o.m, join(&o.extra))?;
                }
            }
            SubsemigroupSpec::TwoSidedI(s) | SubsemigroupSpec::TwoSidedII(s) => {
                writeln!(f, "q={}", s.q)?;
                writeln!(f, "p={}", s.p)?;
                writeln!(f, "d={}", s.d)?;
                writeln!(f, "I={}", join(&s.rows))?;
                writeln!(f, "P={}", join(&s.offsets))?;
                writeln!(f, "FD={}", join(&s.fd))?;
                writeln!(f, "F={}", join(&s.f))?;
            }
        }
        Ok(())
    }
}
