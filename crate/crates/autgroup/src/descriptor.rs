use serde::{Deserialize, Serialize};
use subshift_core::Letter;

/// A sliding-block local rule of a fixed radius, defined exactly on the
/// sorted list of language words of length `2r + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRule {
    pub radius: usize,
    /// Sorted `L_{2r+1}` words the rule is defined on.
    pub words: Vec<Vec<Letter>>,
    /// `table[i]` is the output letter for `words[i]`.
    pub table: Vec<Letter>,
}

impl LocalRule {
    pub fn window(&self) -> usize {
        2 * self.radius + 1
    }

    pub fn lookup(&self, w: &[Letter]) -> Option<Letter> {
        let idx = self.words.binary_search_by(|v| v.as_slice().cmp(w)).ok()?;
        Some(self.table[idx])
    }

    /// Slides the rule over `word`, producing a word shorter by `2r`;
    /// `None` if some window is not in the rule's domain.
    pub fn apply(&self, word: &[Letter]) -> Option<Vec<Letter>> {
        if word.len() < self.window() {
            return Some(Vec::new());
        }
        word.windows(self.window()).map(|w| self.lookup(w)).collect()
    }

    /// `Some(k)` iff the rule is exactly the shift `sigma^k` restricted to
    /// its domain, i.e. returns `w[r + k]` for every word.
    pub fn shift_power(&self) -> Option<i64> {
        let r = self.radius as i64;
        (-r..=r).find(|&k| {
            self.words
                .iter()
                .zip(&self.table)
                .all(|(w, &out)| w[(r + k) as usize] == out)
        })
    }

    /// Identity rule of radius 0 on the given letters.
    pub fn identity(letters: usize) -> LocalRule {
        LocalRule {
            radius: 0,
            words: (0..letters as Letter).map(|l| vec![l]).collect(),
            table: (0..letters as Letter).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertStatus {
    /// Part of a quotient known to exhaust the automorphism group.
    CertifiedTotal,
    /// Possesses a verified inverse rule.
    CertifiedIndividual,
    /// Passes the depth-limited necessary checks only.
    Candidate,
}

/// One automorphism (or candidate): a shift power composed with a local
/// rule.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismDescriptor {
    pub shift_power: i64,
    pub rule: LocalRule,
    pub inverse: Option<LocalRule>,
    pub status: CertStatus,
}

impl AutomorphismDescriptor {
    /// Radius of the composed sliding map `sigma^k . rule`.
    pub fn effective_radius(&self) -> usize {
        self.rule.radius + self.shift_power.unsigned_abs() as usize
    }

    pub fn pure_shift(k: i64, letters: usize) -> AutomorphismDescriptor {
        AutomorphismDescriptor {
            shift_power: k,
            rule: LocalRule::identity(letters),
            inverse: Some(LocalRule::identity(letters)),
            status: CertStatus::CertifiedIndividual,
        }
    }

    pub fn is_shift(&self) -> bool {
        self.rule.shift_power().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rule_applies() {
        let id = LocalRule::identity(2);
        assert_eq!(id.apply(&[0, 1, 1, 0]).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(id.shift_power(), Some(0));
    }

    #[test]
    fn shift_detection() {
        // Radius-1 rule returning the right neighbor, over all eight
        // binary 3-words.
        let words: Vec<Vec<Letter>> =
            (0..8).map(|i| vec![(i >> 2) & 1, (i >> 1) & 1, i & 1]).collect();
        let table: Vec<Letter> = words.iter().map(|w| w[2]).collect();
        let rule = LocalRule { radius: 1, words, table };
        assert_eq!(rule.shift_power(), Some(1));
        assert_eq!(rule.apply(&[0, 1, 0, 0]).unwrap(), vec![0, 0]);
    }
}
