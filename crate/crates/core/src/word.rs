//! Finite words over an alphabet.

use std::ops::Deref;

use crate::alphabet::{Alphabet, Letter};

/// A finite word: a sequence of letter indices, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Wraps a letter vector.
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The underlying letters.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Consumes the word, returning its letters.
    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Appends a letter in place.
    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Sub-word on the index range `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// True when `factor` occurs contiguously in the word.
    pub fn contains_factor(&self, factor: &[Letter]) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.0.windows(factor.len()).any(|w| w == factor)
    }

    /// The lexicographically least rotation. The empty word is its own.
    pub fn least_rotation(&self) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0[i..].to_vec();
                v.extend_from_slice(&self.0[..i]);
                Word(v)
            })
            .min()
            .unwrap()
    }

    /// The shortest `u` with `self = u^k`; equals `self` for primitive words.
    pub fn primitive_root(&self) -> Word {
        let n = self.0.len();
        for d in 1..=n {
            if n.is_multiple_of(d) && self.0.chunks(d).all(|c| c == &self.0[..d]) {
                return Word(self.0[..d].to_vec());
            }
        }
        self.clone()
    }

    /// Renders the word with the symbols of `alphabet`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.0)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}
