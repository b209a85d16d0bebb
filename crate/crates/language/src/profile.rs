use crate::automaton::SuffixAutomaton;
use crate::{FactorLanguage, LanguageError};
use serde::{Deserialize, Serialize};
use subshift_core::Letter;

/// `p_X(n)` for `n <= n_max`, with first differences and the minimal
/// first-difference bound (the finite stand-in for the constant bounding the
/// number of asymptotic components).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexityProfile {
    pub n_max: usize,
    pub values: Vec<u64>,
    /// Signed: window counts of degenerate definitional languages can
    /// decrease, even though subshift languages are monotone.
    pub first_differences: Vec<i64>,
    /// Minimum of `p(n+1) - p(n)` over `1 <= n < n_max`.
    pub diff_bound: Option<i64>,
    pub exactness: ProfileExactness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProfileExactness {
    /// Counts are those of the full language.
    Exact,
    /// Counts are window counts of a declared finite prefix; they are lower
    /// bounds for the language, monotone in the prefix length.
    PrefixTruncated,
}

impl ComplexityProfile {
    fn from_values(values: Vec<u64>, exactness: ProfileExactness) -> Self {
        let n_max = values.len() - 1;
        let first_differences: Vec<i64> =
            values.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
        let diff_bound = if n_max >= 2 {
            first_differences[1..].iter().copied().min()
        } else {
            None
        };
        ComplexityProfile { n_max, values, first_differences, diff_bound, exactness }
    }

    pub fn value(&self, n: usize) -> u64 {
        self.values[n]
    }

    /// Internal consistency: `p(0) = 1`, monotone, `p(n+1) <= |A| p(n)`,
    /// and submultiplicative `p(m+n) <= p(m) p(n)`.
    pub fn check_invariants(&self, alphabet_size: usize) -> Result<(), String> {
        if self.values[0] != 1 {
            return Err("p(0) != 1".into());
        }
        for n in 0..self.n_max {
            if self.values[n + 1] < self.values[n] {
                return Err(format!("p not monotone at {n}"));
            }
            if self.values[n + 1] > self.values[n] * alphabet_size as u64 {
                return Err(format!("p({}) > |A| p({n})", n + 1));
            }
        }
        for m in 0..=self.n_max {
            for n in 0..=(self.n_max - m) {
                if self.values[m + n] > self.values[m] * self.values[n] {
                    return Err(format!("p({m}+{n}) > p({m})p({n})"));
                }
            }
        }
        Ok(())
    }

    /// CSV emitter with columns `n,p,diff` (diff of the previous step is
    /// blank on the first row).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,p,diff\n");
        for n in 0..=self.n_max {
            let diff = if n == 0 {
                String::new()
            } else {
                self.first_differences[n - 1].to_string()
            };
            out.push_str(&format!("{n},{},{diff}\n", self.values[n]));
        }
        out
    }
}

impl FactorLanguage {
    /// The exact complexity profile up to `n_max`.
    ///
    /// For substitutions the counts are computed from the generator texts
    /// `tau^j(a)` via a suffix automaton, iterating the level until the whole
    /// count vector is stable from one level to the next; stability of one
    /// full level implies stability of all later ones, so the profile is
    /// exact. For explicit sequences the profile is the (truncated) window
    /// count of the declared prefix.
    pub fn profile(&self, n_max: usize) -> Result<ComplexityProfile, LanguageError> {
        if let Some(subst) = self.substitution() {
            let alpha = subst.alphabet().size();
            let mut level = 1usize;
            let mut texts: Vec<Vec<Letter>> =
                subst.alphabet().letters().map(|a| subst.image(a).to_vec()).collect();
            let mut all: Vec<Vec<Letter>> = texts.clone();
            while texts.iter().map(Vec::len).min().unwrap() < n_max {
                texts = texts.iter().map(|t| subst.apply(t)).collect();
                all.extend(texts.iter().cloned());
                level += 1;
            }
            let counts = |all: &[Vec<Letter>]| {
                let mut sa = SuffixAutomaton::new(alpha);
                for t in all {
                    sa.insert(t);
                }
                sa.distinct_counts(n_max)
            };
            let mut prev = counts(&all);
            // Levels can only add words; equal consecutive vectors mean the
            // union is stable for every length <= n_max, hence exact.
            let guard = level + 64;
            loop {
                texts = texts.iter().map(|t| subst.apply(t)).collect();
                all.extend(texts.iter().cloned());
                level += 1;
                let cur = counts(&all);
                if cur == prev {
                    return Ok(ComplexityProfile::from_values(cur, ProfileExactness::Exact));
                }
                prev = cur;
                if level > guard {
                    return Err(LanguageError::Precondition(format!(
                        "profile did not stabilize within {guard} levels"
                    )));
                }
            }
        }
        if let Some((prefix, have)) = self.explicit_prefix() {
            if n_max > have {
                return Err(LanguageError::PrefixTooShort { need: n_max, have });
            }
            let mut sa = SuffixAutomaton::new(self.alphabet().size());
            sa.insert(prefix);
            return Ok(ComplexityProfile::from_values(
                sa.distinct_counts(n_max),
                ProfileExactness::PrefixTruncated,
            ));
        }
        if let Some(components) = self.product_components() {
            let parts: Vec<ComplexityProfile> =
                components.iter().map(|c| c.profile(n_max)).collect::<Result<_, _>>()?;
            let exactness = if parts.iter().all(|p| p.exactness == ProfileExactness::Exact) {
                ProfileExactness::Exact
            } else {
                ProfileExactness::PrefixTruncated
            };
            let values: Vec<u64> = (0..=n_max)
                .map(|n| parts.iter().map(|p| p.values[n]).product())
                .collect();
            return Ok(ComplexityProfile::from_values(values, exactness));
        }
        unreachable!("all sources handled");
    }
}
