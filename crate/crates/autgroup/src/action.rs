use crate::{AutError, QuotientGroupPresentation};
use serde::{Deserialize, Serialize};
use subshift_asymptotic::{AsymptoticComponentSet, Direction, OneSidedFixedPoint};
use subshift_core::{Letter, Substitution};

/// The permutation action of the quotient group on the asymptotic
/// components.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentAction {
    /// `perms[i][c]` = image component of component `c` under quotient
    /// element `i`.
    pub perms: Vec<Vec<usize>>,
    /// No nontrivial element fixes a component.
    pub free: bool,
    /// The action respects the composition table.
    pub homomorphism: bool,
}

/// Computes how each radius-0 automorphism permutes the components, by
/// mapping each component's right tail letterwise and matching it against
/// the other tails to the given depth.
pub fn action_on_components(
    quotient: &QuotientGroupPresentation,
    components: &AsymptoticComponentSet,
    tau: &Substitution,
    depth: usize,
) -> Result<ComponentAction, AutError> {
    let depth = depth.max(8);
    let seeds: Vec<Letter> = components.components.iter().map(|c| c.seed).collect();
    let tails: Vec<Vec<Letter>> = seeds
        .iter()
        .map(|&a| {
            OneSidedFixedPoint::new(tau.clone(), components.power, a, Direction::Right)
                .map(|t| t.expand(depth))
        })
        .collect::<Result<_, _>>()?;
    let mut perms = Vec::with_capacity(quotient.order());
    for phi in &quotient.perms {
        let mut perm = Vec::with_capacity(seeds.len());
        for (c, tail) in tails.iter().enumerate() {
            let mapped: Vec<Letter> = tail.iter().map(|&l| phi[l as usize]).collect();
            let target = tails.iter().position(|t| *t == mapped).ok_or_else(|| {
                AutError::Undecided(format!(
                    "image of the tail of component {c} matches no component at depth {depth}"
                ))
            })?;
            // Consistency: the matched seed must be the mapped seed.
            if seeds[target] != phi[seeds[c] as usize] {
                return Err(AutError::Undecided(format!(
                    "tail match of component {c} disagrees with its seed image"
                )));
            }
            perm.push(target);
        }
        perms.push(perm);
    }
    let free = (0..quotient.order()).all(|i| {
        i == quotient.identity || (0..seeds.len()).all(|c| perms[i][c] != c)
    });
    let homomorphism = (0..quotient.order()).all(|i| {
        (0..quotient.order()).all(|j| {
            let composed = quotient.table[i][j];
            (0..seeds.len()).all(|c| perms[composed][c] == perms[i][perms[j][c]])
        })
    });
    Ok(ComponentAction { perms, free, homomorphism })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius_zero_automorphisms;
    use subshift_asymptotic::asymptotic_components_bijective;
    use subshift_core::Alphabet;
    use subshift_language::FactorLanguage;

    #[test]
    fn thue_morse_flip_transposes_components() {
        let tau = Substitution::thue_morse();
        let lang = FactorLanguage::from_substitution(tau.clone());
        let quotient = radius_zero_automorphisms(&tau, &lang, 20).unwrap();
        let components = asymptotic_components_bijective(&tau, &lang, 32).unwrap();
        let action = action_on_components(&quotient, &components, &tau, 32).unwrap();
        assert!(action.free);
        assert!(action.homomorphism);
        let flip_index =
            quotient.perms.iter().position(|p| p == &vec![1, 0]).expect("flip present");
        assert_eq!(action.perms[flip_index], vec![1, 0]);
        assert_eq!(action.perms[quotient.identity], vec![0, 1]);
    }

    #[test]
    fn cyclic3_action_is_free_three_cycles() {
        let a = Alphabet::new(&["a", "b", "c"]).unwrap();
        let tau =
            Substitution::from_rule_strings(a, &[('a', "abc"), ('b', "bca"), ('c', "cab")])
                .unwrap();
        let lang = FactorLanguage::from_substitution(tau.clone());
        let quotient = radius_zero_automorphisms(&tau, &lang, 20).unwrap();
        let components = asymptotic_components_bijective(&tau, &lang, 32).unwrap();
        let action = action_on_components(&quotient, &components, &tau, 32).unwrap();
        assert!(action.free);
        assert!(action.homomorphism);
        for i in 0..quotient.order() {
            if i != quotient.identity {
                // A free action of a 3-cycle on 3 points is a 3-cycle.
                let p = &action.perms[i];
                assert!(p.iter().enumerate().all(|(c, &img)| img != c));
            }
        }
    }
}
