use crate::{groups, AutError};
use serde::{Deserialize, Serialize};
use subshift_core::{FiniteGroup, Letter};

/// The quotient of the automorphism group by the shift, presented as
/// radius-0 letter bijections with their composition table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuotientGroupPresentation {
    /// Sorted permutations; `perms[i][a]` is the image of letter `a`.
    pub perms: Vec<Vec<Letter>>,
    /// `table[i][j]` = index of `perms[i] . perms[j]` (apply `j` first).
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub abelian: bool,
    pub element_orders: Vec<usize>,
    pub iso_label: String,
}

impl QuotientGroupPresentation {
    /// Builds the presentation from a set of permutations, checking group
    /// closure under composition and inverse.
    pub fn from_perms(mut perms: Vec<Vec<Letter>>) -> Result<Self, AutError> {
        perms.sort();
        perms.dedup();
        if perms.is_empty() {
            return Err(AutError::Precondition("empty permutation set".into()));
        }
        let q = perms[0].len();
        let identity_perm: Vec<Letter> = (0..q as Letter).collect();
        let find = |p: &[Letter]| -> Result<usize, AutError> {
            perms
                .binary_search_by(|v| v.as_slice().cmp(p))
                .map_err(|_| AutError::Precondition("set not closed under composition".into()))
        };
        let identity = find(&identity_perm)
            .map_err(|_| AutError::Precondition("identity permutation missing".into()))?;
        let mut table = vec![vec![0; perms.len()]; perms.len()];
        for (i, f) in perms.iter().enumerate() {
            for (j, g) in perms.iter().enumerate() {
                let composed: Vec<Letter> = (0..q).map(|a| f[g[a] as usize]).collect();
                table[i][j] = find(&composed)?;
            }
        }
        let group = FiniteGroup::new(table.clone(), identity)?;
        Ok(QuotientGroupPresentation {
            abelian: group.is_abelian(),
            element_orders: group.element_orders(),
            iso_label: groups::classify(&group),
            perms,
            table,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn to_finite_group(&self) -> FiniteGroup {
        FiniteGroup::new(self.table.clone(), self.identity).expect("validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_group_is_z2() {
        let q = QuotientGroupPresentation::from_perms(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.abelian);
        assert_eq!(q.iso_label, "Z2");
    }

    #[test]
    fn rejects_non_closed() {
        // A 3-cycle without its square.
        let r = QuotientGroupPresentation::from_perms(vec![
            vec![0, 1, 2],
            vec![1, 2, 0],
        ]);
        assert!(r.is_err());
    }
}
