//! Small-group constructions and exhaustive isomorphism testing on Cayley
//! tables, used to classify quotient groups and to drive realizations.

use subshift_core::FiniteGroup;

pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(table, 0).expect("cyclic group is valid")
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let idx = |a: usize, b: usize| a * m + b;
    let mut table = vec![vec![0; n * m]; n * m];
    for a1 in 0..n {
        for b1 in 0..m {
            for a2 in 0..n {
                for b2 in 0..m {
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2));
                }
            }
        }
    }
    FiniteGroup::new(table, idx(g.identity(), h.identity())).expect("product is valid")
}

/// Dihedral group of order `2n`: elements `r^i s^j` indexed `i + n*j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let idx = |i: usize, j: usize| i + n * j;
    let mut table = vec![vec![0; order]; order];
    for i1 in 0..n {
        for j1 in 0..2 {
            for i2 in 0..n {
                for j2 in 0..2 {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2 % n) % n };
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
                }
            }
        }
    }
    FiniteGroup::new(table, 0).expect("dihedral group is valid")
}

/// The quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion() -> FiniteGroup {
    // Encode x = (sign, axis) with axis in {1, i, j, k} as axis*2 + sign.
    let mul = |a: usize, b: usize| -> usize {
        let (sa, xa) = (a & 1, a >> 1);
        let (sb, xb) = (b & 1, b >> 1);
        // Axis multiplication table with result sign.
        let (xr, sr) = match (xa, xb) {
            (0, x) | (x, 0) => (x, 0),
            (x, y) if x == y => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        };
        (xr << 1) | (sa ^ sb ^ sr)
    };
    let table = (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::new(table, 0).expect("quaternion group is valid")
}

/// The symmetric group S3 presented as the dihedral group of order 6.
pub fn symmetric3() -> FiniteGroup {
    dihedral(3)
}

/// Named groups of order at most 8, plus labels for everything else by
/// invariants.
pub fn reference_groups() -> Vec<(String, FiniteGroup)> {
    let z = cyclic;
    vec![
        ("Z1".into(), z(1)),
        ("Z2".into(), z(2)),
        ("Z3".into(), z(3)),
        ("Z4".into(), z(4)),
        ("Z2xZ2".into(), direct_product(&z(2), &z(2))),
        ("Z5".into(), z(5)),
        ("Z6".into(), z(6)),
        ("S3".into(), symmetric3()),
        ("Z7".into(), z(7)),
        ("Z8".into(), z(8)),
        ("Z4xZ2".into(), direct_product(&z(4), &z(2))),
        ("Z2xZ2xZ2".into(), direct_product(&direct_product(&z(2), &z(2)), &z(2))),
        ("D4".into(), dihedral(4)),
        ("Q8".into(), quaternion()),
    ]
}

/// Exhaustive isomorphism search for desk-scale groups (order <= 24):
/// depth-first construction of a bijection consistent with both tables.
/// Returns a witness mapping `a -> f(a)` or `None`.
pub fn isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    if g.element_orders() != h.element_orders() || g.is_abelian() != h.is_abelian() {
        return None;
    }
    let n = g.order();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    f[g.identity()] = h.identity();
    used[h.identity()] = true;
    fn extend(
        g: &FiniteGroup,
        h: &FiniteGroup,
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = g.order();
        let Some(a) = (0..n).find(|&a| f[a] == usize::MAX) else {
            return true;
        };
        for b in 0..n {
            if used[b] || g.element_order(a) != h.element_order(b) {
                continue;
            }
            // Tentatively map a -> b and close under products with the
            // already-mapped elements; roll back on conflict.
            let snapshot_f = f.clone();
            let snapshot_used = used.clone();
            f[a] = b;
            used[b] = true;
            if close(g, h, f, used) && extend(g, h, f, used) {
                return true;
            }
            *f = snapshot_f;
            *used = snapshot_used;
        }
        false
    }
    fn close(g: &FiniteGroup, h: &FiniteGroup, f: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = g.order();
        loop {
            let mut changed = false;
            for a in 0..n {
                if f[a] == usize::MAX {
                    continue;
                }
                for b in 0..n {
                    if f[b] == usize::MAX {
                        continue;
                    }
                    let ab = g.mul(a, b);
                    let fab = h.mul(f[a], f[b]);
                    if f[ab] == usize::MAX {
                        if used[fab] {
                            return false;
                        }
                        f[ab] = fab;
                        used[fab] = true;
                        changed = true;
                    } else if f[ab] != fab {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
    if extend(g, h, &mut f, &mut used) {
        Some(f)
    } else {
        None
    }
}

/// A display label: the matching reference group's name, or an
/// invariant-based fallback.
pub fn classify(g: &FiniteGroup) -> String {
    for (name, reference) in reference_groups() {
        if isomorphism(g, &reference).is_some() {
            return name;
        }
    }
    let kind = if g.is_abelian() { "abelian" } else { "nonabelian" };
    format!("order-{} {kind} {:?}", g.order(), g.element_orders())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_groups_are_valid_and_distinct() {
        let groups = reference_groups();
        for (i, (name_a, a)) in groups.iter().enumerate() {
            assert_eq!(classify(a), *name_a);
            for (name_b, b) in groups.iter().skip(i + 1) {
                assert!(
                    isomorphism(a, b).is_none(),
                    "{name_a} and {name_b} should not be isomorphic"
                );
            }
        }
    }

    #[test]
    fn isomorphism_finds_witness() {
        // Z6 = Z2 x Z3.
        let z6 = cyclic(6);
        let z2z3 = direct_product(&cyclic(2), &cyclic(3));
        let f = isomorphism(&z6, &z2z3).expect("isomorphic");
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(f[z6.mul(a, b)], z2z3.mul(f[a], f[b]));
            }
        }
    }

    #[test]
    fn q8_and_d4_differ() {
        // Same order and both nonabelian, distinguished by element orders.
        assert!(isomorphism(&quaternion(), &dihedral(4)).is_none());
        assert_eq!(quaternion().element_orders(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }
}
