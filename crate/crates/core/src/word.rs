use crate::{Alphabet, CoreError, Letter};
use std::fmt;

/// A finite word over an alphabet, stored as letter indices.
///
/// Hot paths work on `&[Letter]` directly; `Word` is the validated boundary
/// type for parsing and display.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Letter>,
}

impl Word {
    pub fn new(symbols: Vec<Letter>, alphabet: &Alphabet) -> Result<Self, CoreError> {
        let size = alphabet.size();
        for &s in &symbols {
            if (s as usize) >= size {
                return Err(CoreError::LetterOutOfRange { index: s as usize, size });
            }
        }
        Ok(Word { symbols })
    }

    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<Self, CoreError> {
        Ok(Word { symbols: alphabet.parse_word(s)? })
    }

    pub fn empty() -> Self {
        Word { symbols: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Letter] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Letter> {
        self.symbols
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        alphabet.format_word(&self.symbols)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(symbols: Vec<Letter>) -> Self {
        Word { symbols }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.symbols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_indices() {
        let a = Alphabet::binary();
        assert!(Word::new(vec![0, 1, 1], &a).is_ok());
        assert!(Word::new(vec![0, 2], &a).is_err());
        assert_eq!(Word::parse("101", &a).unwrap().len(), 3);
    }
}
