use crate::AsymptoticError;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use subshift_core::Letter;
use subshift_language::{FactorLanguage, Side};

/// The tree of left-special words: level-`n` nodes are the left-special
/// words of length `n`, and `w -> w'` is an edge when `w` is the length-`n`
/// prefix of `w'`. Infinite branches correspond to right tails of
/// asymptotic pairs; at finite depth the picture is truncation-certified.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeftSpecialTree {
    pub depth: usize,
    /// Left-special words per level `1..=depth`, with their left-extension
    /// letters.
    pub levels: Vec<BTreeMap<Vec<Letter>, BTreeSet<Letter>>>,
}

impl LeftSpecialTree {
    pub fn nodes_at(&self, n: usize) -> usize {
        self.levels[n - 1].len()
    }

    /// Deepest-level words (the surviving branches at this depth).
    pub fn branches(&self) -> &BTreeMap<Vec<Letter>, BTreeSet<Letter>> {
        &self.levels[self.depth - 1]
    }

    /// Number of level-`n` words that still have a descendant at the
    /// deepest level.
    pub fn persistent_at(&self, n: usize) -> usize {
        let deepest = &self.levels[self.depth - 1];
        self.levels[n - 1]
            .keys()
            .filter(|w| deepest.keys().any(|d| d.starts_with(w)))
            .count()
    }
}

pub fn left_special_tree(
    lang: &FactorLanguage,
    depth: usize,
) -> Result<LeftSpecialTree, AsymptoticError> {
    if depth == 0 {
        return Err(AsymptoticError::Precondition("depth must be >= 1".into()));
    }
    let mut levels = Vec::with_capacity(depth);
    for n in 1..=depth {
        levels.push(lang.special_words(n, Side::Left)?);
    }
    Ok(LeftSpecialTree { depth, levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use subshift_core::{Alphabet, Substitution};

    #[test]
    fn fibonacci_single_branch_every_level() {
        let lang = FactorLanguage::from_substitution(Substitution::fibonacci());
        let tree = left_special_tree(&lang, 20).unwrap();
        for n in 1..=20 {
            assert_eq!(tree.nodes_at(n), 1, "level {n}");
        }
    }

    #[test]
    fn thue_morse_two_persistent_branches() {
        let lang = FactorLanguage::from_substitution(Substitution::thue_morse());
        let tree = left_special_tree(&lang, 20).unwrap();
        for n in 5..=12 {
            assert_eq!(tree.persistent_at(n), 2, "level {n}");
        }
    }

    #[test]
    fn periodic_sequence_gives_empty_tree() {
        let symbols: Vec<u8> = [0, 1].iter().cycle().take(64).copied().collect();
        let lang = FactorLanguage::from_explicit(Alphabet::binary(), symbols, 64).unwrap();
        let tree = left_special_tree(&lang, 10).unwrap();
        for n in 1..=10 {
            assert_eq!(tree.nodes_at(n), 0);
        }
    }

    #[test]
    fn tree_edges_are_prefix_consistent() {
        // Every node at level n+1 has its length-n prefix at level n.
        let lang = FactorLanguage::from_substitution(Substitution::thue_morse());
        let tree = left_special_tree(&lang, 12).unwrap();
        for n in 1..12 {
            for w in tree.levels[n].keys() {
                assert!(tree.levels[n - 1].contains_key(&w[..n]));
            }
        }
    }
}
