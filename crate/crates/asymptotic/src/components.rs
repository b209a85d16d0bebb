use crate::{AsymptoticError, Direction, OneSidedFixedPoint};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use subshift_core::{Letter, Substitution};
use subshift_language::{FactorLanguage, PeriodicityVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exactness {
    Exact,
    TruncationCertified { depth: usize },
}

/// One asymptotic component of a bijective substitution subshift: the
/// right tail `z^(seed)` shared by its asymptotic pairs, and the branch
/// letters that extend it on the left.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AsymptoticComponent {
    pub seed: Letter,
    pub branches: BTreeSet<Letter>,
    pub exactness: Exactness,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AsymptoticComponentSet {
    /// Power `p` with identity first- and last-letter maps.
    pub power: u32,
    pub depth: usize,
    pub components: Vec<AsymptoticComponent>,
    /// Candidate pairs that the finite-depth orbit check would merge;
    /// expected empty for primitive aperiodic bijective substitutions.
    pub merged_pairs: Vec<(Letter, Letter)>,
}

impl AsymptoticComponentSet {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn is_exact(&self) -> bool {
        self.components.iter().all(|c| c.exactness == Exactness::Exact)
    }
}

/// Exact asymptotic components of a primitive aperiodic bijective
/// constant-length substitution.
///
/// With `p` chosen so the first- and last-letter maps of `tau^p` are the
/// identity, every letter `a` whose set `B_a = {b : ba in L_2}` has at
/// least two elements seeds a component with right tail `z^(a)` and branch
/// letters `B_a`.
///
/// Candidates with different seeds never merge: a merge would mean
/// `sigma^m z^(a) = sigma^m' z^(a')` for the tails. Applying `tau^p` (which
/// fixes both) turns unequal shifts into an eventual period, impossible in
/// an aperiodic minimal subshift; equal shifts plus bijectivity force
/// `a = a'` column by column. So under the checked preconditions the
/// candidate list is the component list, reported exact. The per-pair tail
/// separation is still verified to `depth` as a sanity probe; a failed
/// probe downgrades the result instead of merging silently.
pub fn asymptotic_components_bijective(
    tau: &Substitution,
    lang: &FactorLanguage,
    depth: usize,
) -> Result<AsymptoticComponentSet, AsymptoticError> {
    if !tau.is_bijective() {
        return Err(AsymptoticError::Precondition("substitution is not bijective".into()));
    }
    if !tau.is_primitive() {
        return Err(AsymptoticError::Precondition("substitution is not primitive".into()));
    }
    let cutoff = depth.clamp(8, 64);
    if let PeriodicityVerdict::Periodic { witness_n } = lang.is_eventually_periodic(cutoff)? {
        return Err(AsymptoticError::Precondition(format!(
            "subshift is periodic (p(n) <= n at n = {witness_n})"
        )));
    }
    let p = tau.first_last_letter_period()?;
    let two = lang.factors(2)?;
    let q = tau.alphabet().size();
    let mut candidates: Vec<(Letter, BTreeSet<Letter>)> = Vec::new();
    for a in tau.alphabet().letters() {
        let mut left: BTreeSet<Letter> = BTreeSet::new();
        for b in tau.alphabet().letters() {
            if two.contains(&vec![b, a][..]) {
                left.insert(b);
            }
        }
        if left.len() >= 2 {
            candidates.push((a, left));
        }
    }

    // Sanity probe: tails with different seeds differ at position 0 by
    // construction; check a window anyway so a regression cannot silently
    // produce duplicate tails.
    let mut merged_pairs = Vec::new();
    let probe = depth.max(4);
    let tails: Vec<Vec<Letter>> = candidates
        .iter()
        .map(|(a, _)| {
            OneSidedFixedPoint::new(tau.clone(), p, *a, Direction::Right)
                .map(|t| t.expand(probe))
        })
        .collect::<Result<_, _>>()?;
    for i in 0..tails.len() {
        for j in (i + 1)..tails.len() {
            if tails[i] == tails[j] {
                merged_pairs.push((candidates[i].0, candidates[j].0));
            }
        }
    }
    let exactness = if merged_pairs.is_empty() {
        Exactness::Exact
    } else {
        Exactness::TruncationCertified { depth }
    };
    let components = candidates
        .into_iter()
        .map(|(seed, branches)| AsymptoticComponent {
            seed,
            branches,
            exactness: exactness.clone(),
        })
        .collect::<Vec<_>>();
    debug_assert!(components.len() <= q);
    Ok(AsymptoticComponentSet { power: p, depth, components, merged_pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use subshift_core::Alphabet;

    fn cyclic3() -> Substitution {
        let a = Alphabet::new(&["a", "b", "c"]).unwrap();
        Substitution::from_rule_strings(a, &[('a', "abc"), ('b', "bca"), ('c', "cab")]).unwrap()
    }

    #[test]
    fn thue_morse_has_two_components() {
        let tau = Substitution::thue_morse();
        let lang = FactorLanguage::from_substitution(tau.clone());
        let set = asymptotic_components_bijective(&tau, &lang, 32).unwrap();
        assert_eq!(set.power, 2);
        assert_eq!(set.count(), 2);
        assert!(set.is_exact());
        for c in &set.components {
            assert_eq!(c.branches.len(), 2);
        }
    }

    #[test]
    fn cyclic3_count_divisible_by_three() {
        let tau = cyclic3();
        let lang = FactorLanguage::from_substitution(tau.clone());
        let set = asymptotic_components_bijective(&tau, &lang, 32).unwrap();
        assert_eq!(set.count() % 3, 0);
        assert!(set.is_exact());
    }

    #[test]
    fn rejects_non_bijective() {
        let tau = Substitution::fibonacci();
        let lang = FactorLanguage::from_substitution(tau.clone());
        assert!(asymptotic_components_bijective(&tau, &lang, 16).is_err());
    }

    #[test]
    fn branch_letters_extend_in_language() {
        let tau = Substitution::thue_morse();
        let lang = FactorLanguage::from_substitution(tau.clone());
        let set = asymptotic_components_bijective(&tau, &lang, 16).unwrap();
        let two = lang.factors(2).unwrap();
        for c in &set.components {
            for &b in &c.branches {
                assert!(two.contains(&vec![b, c.seed][..]));
            }
        }
    }

    #[test]
    fn component_count_bounded_by_diff_bound() {
        for tau in [Substitution::thue_morse(), cyclic3()] {
            let lang = FactorLanguage::from_substitution(tau.clone());
            let set = asymptotic_components_bijective(&tau, &lang, 24).unwrap();
            let profile = lang.profile(24).unwrap();
            let bound = profile.diff_bound.unwrap();
            assert!(
                set.count() as i64 <= bound,
                "{} components vs diff bound {bound}",
                set.count()
            );
        }
    }
}
