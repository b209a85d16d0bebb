use crate::{FactorLanguage, LanguageError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use subshift_core::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl FactorLanguage {
    /// Words of `L_n` with at least two valid one-letter extensions on the
    /// given side, mapped to their extension sets.
    pub fn special_words(
        &self,
        n: usize,
        side: Side,
    ) -> Result<BTreeMap<Vec<Letter>, BTreeSet<Letter>>, LanguageError> {
        if n == 0 {
            return Err(LanguageError::Precondition("special words need n >= 1".into()));
        }
        let longer = self.factors(n + 1)?;
        let mut extensions: BTreeMap<Vec<Letter>, BTreeSet<Letter>> = BTreeMap::new();
        for w in longer.iter() {
            let (core, ext) = match side {
                Side::Left => (&w[1..], w[0]),
                Side::Right => (&w[..n], w[n]),
            };
            extensions.entry(core.to_vec()).or_default().insert(ext);
        }
        extensions.retain(|_, exts| exts.len() >= 2);
        Ok(extensions)
    }

    /// Sum over special words of (extensions - 1); equals `p(n+1) - p(n)`.
    pub fn special_excess(&self, n: usize, side: Side) -> Result<usize, LanguageError> {
        Ok(self.special_words(n, side)?.values().map(|e| e.len() - 1).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subshift_core::{Alphabet, Substitution};

    #[test]
    fn thue_morse_both_letters_left_special_at_one() {
        let lang = FactorLanguage::from_substitution(Substitution::thue_morse());
        let special = lang.special_words(1, Side::Left).unwrap();
        assert_eq!(special.len(), 2);
        assert!(special.contains_key(&vec![0]));
        assert!(special.contains_key(&vec![1]));
    }

    #[test]
    fn fibonacci_has_one_left_special_per_length() {
        let lang = FactorLanguage::from_substitution(Substitution::fibonacci());
        for n in 1..=8 {
            let special = lang.special_words(n, Side::Left).unwrap();
            assert_eq!(special.len(), 1, "n={n}");
        }
    }

    #[test]
    fn periodic_sequence_has_none() {
        let symbols: Vec<u8> = [0, 1].iter().cycle().take(64).copied().collect();
        let lang = FactorLanguage::from_explicit(Alphabet::binary(), symbols, 64).unwrap();
        for n in 1..=8 {
            assert!(lang.special_words(n, Side::Left).unwrap().is_empty());
        }
    }

    #[test]
    fn excess_matches_difference() {
        for subst in [
            Substitution::thue_morse(),
            Substitution::fibonacci(),
            Substitution::nonminimal_010_11(),
        ] {
            let lang = FactorLanguage::from_substitution(subst);
            for n in 1..=10 {
                let diff =
                    lang.complexity(n + 1).unwrap() - lang.complexity(n).unwrap();
                assert_eq!(lang.special_excess(n, Side::Left).unwrap(), diff);
                assert_eq!(lang.special_excess(n, Side::Right).unwrap(), diff);
            }
        }
    }
}
