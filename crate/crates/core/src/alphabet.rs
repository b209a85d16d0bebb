use crate::{CoreError, Letter};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// An ordered finite set of symbol labels.
///
/// Labels are restricted to single characters so that rule strings and word
/// strings can be parsed without separators. Internally letters are the
/// dense indices `0..size`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Alphabet {
    labels: Arc<Vec<char>>,
    index: Arc<BTreeMap<char, Letter>>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self, CoreError> {
        if labels.is_empty() {
            return Err(CoreError::EmptyAlphabet);
        }
        if labels.len() > 255 {
            return Err(CoreError::AlphabetTooLarge(labels.len()));
        }
        let mut chars = Vec::with_capacity(labels.len());
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            let s = label.as_ref();
            let mut it = s.chars();
            let c = match (it.next(), it.next()) {
                (Some(c), None) => c,
                _ => return Err(CoreError::BadLabel(s.to_string())),
            };
            if index.insert(c, i as Letter).is_some() {
                return Err(CoreError::BadLabel(s.to_string()));
            }
            chars.push(c);
        }
        Ok(Alphabet { labels: Arc::new(chars), index: Arc::new(index) })
    }

    /// Alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet::new(&["0", "1"]).expect("binary alphabet is valid")
    }

    /// A canonical alphabet of `n` generated single-character labels
    /// (`0-9a-z...`), used for group realizations.
    pub fn canonical(n: usize) -> Result<Self, CoreError> {
        const CHARSET: &str = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
        let chars: Vec<String> = CHARSET.chars().take(n).map(|c| c.to_string()).collect();
        if chars.len() < n {
            return Err(CoreError::AlphabetTooLarge(n));
        }
        Alphabet::new(&chars)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, letter: Letter) -> char {
        self.labels[letter as usize]
    }

    pub fn letter(&self, label: char) -> Result<Letter, CoreError> {
        self.index.get(&label).copied().ok_or_else(|| CoreError::UnknownSymbol(label.to_string()))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.size() as u8).map(|i| i as Letter)
    }

    /// Parses a concatenation of labels into letter indices.
    pub fn parse_word(&self, s: &str) -> Result<Vec<Letter>, CoreError> {
        s.chars().map(|c| self.letter(c)).collect()
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.label(l)).collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.labels.iter().collect::<String>())
    }
}

impl TryFrom<Vec<String>> for Alphabet {
    type Error = CoreError;
    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        Alphabet::new(&v)
    }
}

impl From<Alphabet> for Vec<String> {
    fn from(a: Alphabet) -> Vec<String> {
        a.labels.iter().map(|c| c.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_and_label_are_inverse() {
        let a = Alphabet::new(&["0", "1", "2"]).unwrap();
        for l in a.letters() {
            assert_eq!(a.letter(a.label(l)).unwrap(), l);
        }
        assert_eq!(a.size(), 3);
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(Alphabet::new(&["ab"]).is_err());
        assert!(Alphabet::new(&["a", "a"]).is_err());
        assert!(Alphabet::new::<&str>(&[]).is_err());
    }

    #[test]
    fn parses_words() {
        let a = Alphabet::binary();
        assert_eq!(a.parse_word("0110").unwrap(), vec![0, 1, 1, 0]);
        assert!(a.parse_word("012").is_err());
        assert_eq!(a.format_word(&[1, 0]), "10");
    }
}
