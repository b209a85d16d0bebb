use crate::CoreError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite group presented by its Cayley table.
///
/// `table[g][h]` is the index of the product `g * h`; element `identity` is
/// the neutral element. Validation checks that rows and columns are
/// permutations, that the identity behaves as such, and associativity by
/// exhaustive triple check (these tables stay at desk scale).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, CoreError> {
        let q = table.len();
        if q == 0 {
            return Err(CoreError::BadGroup("empty table".into()));
        }
        if identity >= q {
            return Err(CoreError::BadGroup("identity index out of range".into()));
        }
        for row in &table {
            if row.len() != q {
                return Err(CoreError::BadGroup("table is not square".into()));
            }
            if row.iter().any(|&x| x >= q) {
                return Err(CoreError::BadGroup("entry out of range".into()));
            }
        }
        for i in 0..q {
            let mut row_seen = vec![false; q];
            let mut col_seen = vec![false; q];
            for j in 0..q {
                if row_seen[table[i][j]] {
                    return Err(CoreError::BadGroup(format!("row {i} is not a permutation")));
                }
                row_seen[table[i][j]] = true;
                if col_seen[table[j][i]] {
                    return Err(CoreError::BadGroup(format!("column {i} is not a permutation")));
                }
                col_seen[table[j][i]] = true;
            }
            if table[identity][i] != i || table[i][identity] != i {
                return Err(CoreError::BadGroup("identity row/column is not the identity".into()));
            }
        }
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(CoreError::BadGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: q, table, identity })
    }

    pub fn from_json(json: &str) -> Result<Self, CoreError> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.table[a][b] == self.identity).expect("group has inverses")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut cur = a;
        let mut n = 1;
        while cur != self.identity {
            cur = self.mul(cur, a);
            n += 1;
        }
        n
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn element_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        orders
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

impl TryFrom<GroupRepr> for FiniteGroup {
    type Error = CoreError;
    fn try_from(r: GroupRepr) -> Result<Self, Self::Error> {
        if r.order != r.table.len() {
            return Err(CoreError::BadGroup("declared order does not match table".into()));
        }
        FiniteGroup::new(r.table, r.identity)
    }
}

impl From<FiniteGroup> for GroupRepr {
    fn from(g: FiniteGroup) -> GroupRepr {
        GroupRepr { order: g.order, table: g.table, identity: g.identity }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(table, 0).unwrap()
    }

    #[test]
    fn cyclic_groups_validate() {
        for n in 1..=6 {
            let g = z(n);
            assert_eq!(g.order(), n);
            assert!(g.is_abelian());
            assert_eq!(g.element_order(if n > 1 { 1 } else { 0 }), n.max(1));
        }
    }

    #[test]
    fn rejects_non_groups() {
        // Row not a permutation.
        assert!(FiniteGroup::new(vec![vec![0, 0], vec![1, 0]], 0).is_err());
        // Latin square that is not associative (q=5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::new(loop5, 0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = z(3);
        let j = g.to_json();
        assert_eq!(FiniteGroup::from_json(&j).unwrap(), g);
    }

    #[test]
    fn inverse_and_orders() {
        let g = z(6);
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
        }
        assert_eq!(g.element_orders(), vec![1, 2, 3, 3, 6, 6]);
    }
}
