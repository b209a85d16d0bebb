use proptest::prelude::*;
use subshift_core::{Alphabet, Substitution};

/// Random small substitutions over 2-4 letters with rule lengths 1-4,
/// filtered to the growth-checked ones accepted by the constructor.
fn arb_substitution() -> impl Strategy<Value = Substitution> {
    (2usize..=4)
        .prop_flat_map(|q| {
            let rule = prop::collection::vec(0u8..q as u8, 1..=4);
            (Just(q), prop::collection::vec(rule, q))
        })
        .prop_filter_map("growth-checked", |(q, rules)| {
            let alphabet = Alphabet::canonical(q).unwrap();
            Substitution::new(alphabet, rules).ok()
        })
}

fn arb_bijective() -> impl Strategy<Value = Substitution> {
    // Columns are permutations of {0,1}: identity or swap.
    prop::collection::vec(prop::bool::ANY, 2..=4).prop_map(|cols| {
        let rules: Vec<Vec<u8>> = (0u8..2)
            .map(|a| cols.iter().map(|&swap| if swap { 1 - a } else { a }).collect())
            .collect();
        Substitution::new(Alphabet::binary(), rules).unwrap()
    })
}

proptest! {
    #[test]
    fn expansion_powers_compose(s in arb_substitution(), m in 1u32..3, n in 1u32..3) {
        // tau^m applied to tau^n(a) equals tau^(m+n)(a).
        let lhs = s.compose(m + n);
        let sm = s.compose(m);
        let sn = s.compose(n);
        for a in s.alphabet().letters() {
            prop_assert_eq!(lhs.image(a).to_vec(), sm.apply(sn.image(a)));
        }
    }

    #[test]
    fn powers_preserve_bijectivity(s in arb_bijective(), n in 1u32..4) {
        prop_assert!(s.is_bijective());
        prop_assert!(s.compose(n).is_bijective());
    }

    #[test]
    fn powers_preserve_primitivity(s in arb_substitution(), n in 1u32..4) {
        prop_assert_eq!(s.compose(n).is_primitive(), s.is_primitive());
    }

    #[test]
    fn constant_length_powers_multiply(s in arb_bijective(), n in 1u32..4) {
        let l = s.constant_length().unwrap();
        prop_assert_eq!(s.compose(n).constant_length().unwrap(), l.pow(n));
    }
}
