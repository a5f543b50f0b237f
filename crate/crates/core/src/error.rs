use thiserror::Error;

use crate::element::Element;
use crate::iorder::Decision;
use crate::subsemigroup::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an idempotent")]
    NotIdempotent(Element),

    #[error("triangle bounds require q <= p (got q={q}, p={p})")]
    TriangleBounds { q: u64, p: u64 },

    #[error("modulus d must be positive")]
    ZeroModulus,

    #[error("coordinate overflow")]
    Overflow,

    #[error("invalid letter {letter:?} at position {position}; words use only 'a' and 'b'")]
    InvalidLetter { letter: char, position: usize },

    #[error("invalid element syntax {0:?}; expected (i,j)")]
    ElementSyntax(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid subsemigroup parameters: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("not a left I-order: {}", .0.summary())]
    NotLeftIOrder(Box<Decision>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
