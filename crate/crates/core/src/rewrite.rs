//! The bicyclic monoid as words over `{a, b}` modulo `ba = 1`.
//!
//! This is an independent model of the monoid used to cross-check the
//! closed-form product in [`crate::element`]. The rewriting system
//! `{ba -> ε}` is length-reducing and confluent, so every word has a
//! unique normal form `a^i b^j`.

use std::fmt;
use std::str::FromStr;

use crate::element::Element;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

/// Which redex a naive rewriter deletes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionOrder {
    Leftmost,
    Rightmost,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// The word `a^i b^j`.
    pub fn standard(x: Element) -> Self {
        let mut letters = Vec::with_capacity((x.i + x.j) as usize);
        letters.extend(std::iter::repeat_n(Letter::A, x.i as usize));
        letters.extend(std::iter::repeat_n(Letter::B, x.j as usize));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// True iff the word has no factor `ba`.
    pub fn is_normal(&self) -> bool {
        !self.0.windows(2).any(|w| w == [Letter::B, Letter::A])
    }
}

/// Normal form of `w` in a single left-to-right pass.
///
/// Keeps the count `i` of leading `a`s and the count `j` of trailing `b`s
/// of the normal form read so far; an `a` arriving while `j > 0` cancels
/// one of those `b`s.
pub fn word_normalize(w: &Word) -> Element {
    let (mut i, mut j) = (0u64, 0u64);
    for letter in &w.0 {
        match letter {
            Letter::A if j > 0 => j -= 1,
            Letter::A => i += 1,
            Letter::B => j += 1,
        }
    }
    Element::new(i, j)
}

/// Normal form by repeatedly deleting one `ba` factor until none remains.
///
/// Quadratic; kept as a second reference for [`word_normalize`].
pub fn normalize_by_deletion(w: &Word, order: DeletionOrder) -> Element {
    let mut letters = w.0.clone();
    loop {
        let redex = |k: &usize| letters[*k] == Letter::B && letters[*k + 1] == Letter::A;
        let n = letters.len().saturating_sub(1);
        let found = match order {
            DeletionOrder::Leftmost => (0..n).find(redex),
            DeletionOrder::Rightmost => (0..n).rev().find(redex),
        };
        match found {
            Some(k) => {
                letters.drain(k..k + 2);
            }
            None => break,
        }
    }
    let i = letters.iter().take_while(|&&l| l == Letter::A).count();
    Element::new(i as u64, (letters.len() - i) as u64)
}

/// Product computed by concatenating standard words and normalizing.
pub fn multiply_via_rewriting(x: Element, y: Element) -> Element {
    word_normalize(&Word::standard(x).concat(&Word::standard(y)))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                letter => Err(Error::InvalidLetter { letter, position }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn norm(s: &str) -> Element {
        word_normalize(&s.parse().unwrap())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(norm("ba"), Element::new(0, 0));
        assert_eq!(norm("ab"), Element::new(1, 1));
        assert_eq!(norm("aababb"), Element::new(2, 2));
        assert_eq!(norm(""), Element::IDENTITY);
        assert_eq!(norm("bbbaaa"), Element::IDENTITY);
        assert_eq!(norm("aabbbaaaaab"), Element::new(4, 1));
    }

    #[test]
    fn normalize_matches_folded_generators() {
        let w: Word = "aababb".parse().unwrap();
        let folded = w.letters().iter().fold(Element::IDENTITY, |acc, l| {
            acc * match l {
                Letter::A => Element::A,
                Letter::B => Element::B,
            }
        });
        assert_eq!(folded, word_normalize(&w));
    }

    #[test]
    fn rewriting_products() {
        assert_eq!(
            multiply_via_rewriting(Element::new(2, 3), Element::new(5, 1)),
            Element::new(4, 1)
        );
        assert_eq!(
            multiply_via_rewriting(Element::IDENTITY, Element::IDENTITY),
            Element::IDENTITY
        );
        assert_eq!(
            multiply_via_rewriting(Element::new(1, 2), Element::new(2, 1)),
            Element::new(1, 1)
        );
    }

    #[test]
    fn rejects_foreign_letters() {
        let err = "abc".parse::<Word>().unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidLetter {
                letter: 'c',
                position: 2
            }
        ));
    }

    #[test]
    fn standard_word_is_normal() {
        let w = Word::standard(Element::new(3, 2));
        assert_eq!(w.to_string(), "aaabb");
        assert!(w.is_normal());
        assert!(!"aba".parse::<Word>().unwrap().is_normal());
    }

    fn word() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B)], 0..=40)
            .prop_map(Word::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn deletion_order_is_irrelevant(w in word()) {
            let left = normalize_by_deletion(&w, DeletionOrder::Leftmost);
            let right = normalize_by_deletion(&w, DeletionOrder::Rightmost);
            prop_assert_eq!(left, right);
            prop_assert_eq!(left, word_normalize(&w));
        }

        #[test]
        fn normal_form_is_a_normal_word(w in word()) {
            prop_assert!(Word::standard(word_normalize(&w)).is_normal());
        }
    }
}
