//! Alphabets and letters.
//!
//! Letters are stored as indices into an [`Alphabet`]; the alphabet maps them
//! back to single-character symbols for parsing and display.

use crate::error::{Error, Result};

/// Index of a letter within its [`Alphabet`].
pub type Letter = u8;

/// Maximum number of distinct symbols an alphabet may hold.
pub const MAX_LETTERS: usize = 64;

/// An ordered set of distinct single-character symbols.
///
/// The order is stable and defines the letter indices used everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from symbols in the given order.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut out = Vec::new();
        for c in symbols {
            if !c.is_ascii_alphanumeric() {
                return Err(Error::BadSymbol(c));
            }
            if out.contains(&c) {
                return Err(Error::Parse(format!("repeated symbol {c:?}")));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::Parse("empty alphabet".into()));
        }
        if out.len() > MAX_LETTERS {
            return Err(Error::Parse(format!(
                "alphabet larger than {MAX_LETTERS} symbols"
            )));
        }
        Ok(Self { symbols: out })
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// True when the alphabet has no letters. Construction forbids this;
    /// kept for idiomatic pairing with `len`.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Index of a symbol, if present.
    pub fn index_of(&self, symbol: char) -> Option<Letter> {
        self.symbols.iter().position(|&c| c == symbol).map(|i| i as Letter)
    }

    /// Symbol of a letter.
    ///
    /// Panics on out-of-range letters; letters are only produced paired with
    /// their alphabet.
    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter as usize]
    }

    /// All letters in index order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len()).map(|i| i as Letter)
    }

    /// Renders a letter slice as a string of symbols.
    pub fn render(&self, letters: &[Letter]) -> String {
        letters.iter().map(|&l| self.symbol(l)).collect()
    }

    /// Parses a string of symbols into letters.
    pub fn parse(&self, text: &str) -> Result<Vec<Letter>> {
        text.chars()
            .map(|c| self.index_of(c).ok_or(Error::UnknownLetter(c)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_symbols_and_duplicates() {
        assert_eq!(Alphabet::new(['a', '!']), Err(Error::BadSymbol('!')));
        assert!(matches!(Alphabet::new(['a', 'a']), Err(Error::Parse(_))));
        assert!(matches!(Alphabet::new([]), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trips_symbols() {
        let a = Alphabet::new(['a', 'b', 'c']).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.index_of('b'), Some(1));
        assert_eq!(a.index_of('z'), None);
        assert_eq!(a.symbol(2), 'c');
        assert_eq!(a.parse("cab").unwrap(), vec![2, 0, 1]);
        assert_eq!(a.render(&[2, 0, 1]), "cab");
        assert_eq!(a.parse("ax"), Err(Error::UnknownLetter('x')));
    }
}
