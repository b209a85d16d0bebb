use crate::{Alphabet, CoreError, Letter};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// A substitution `tau`, mapping each letter to a nonempty word.
///
/// Construction rejects degenerate substitutions where some `|tau^n(a)|`
/// stays bounded (a letter whose single-letter rules chain into a cycle), so
/// every accepted substitution generates arbitrarily long words from every
/// letter.
#[derive(Clone)]
pub struct Substitution {
    alphabet: Alphabet,
    rules: Vec<Vec<Letter>>,
    primitive: OnceLock<bool>,
    bijective: OnceLock<bool>,
}

/// Wire format: `{"alphabet": ["0","1"], "rules": {"0": "01", "1": "10"}}`.
#[derive(Serialize, Deserialize)]
struct SubstitutionRepr {
    alphabet: Vec<String>,
    rules: BTreeMap<String, String>,
}

impl Substitution {
    pub fn new(alphabet: Alphabet, rules: Vec<Vec<Letter>>) -> Result<Self, CoreError> {
        let q = alphabet.size();
        if rules.len() != q || rules.iter().any(|r| r.is_empty()) {
            return Err(CoreError::MissingOrEmptyRule);
        }
        for rule in &rules {
            for &l in rule {
                if (l as usize) >= q {
                    return Err(CoreError::LetterOutOfRange { index: l as usize, size: q });
                }
            }
        }
        let sub = Substitution {
            alphabet,
            rules,
            primitive: OnceLock::new(),
            bijective: OnceLock::new(),
        };
        sub.check_growth()?;
        Ok(sub)
    }

    /// Parses rule strings over the alphabet labels.
    pub fn from_rule_strings<S: AsRef<str>>(
        alphabet: Alphabet,
        rules: &[(char, S)],
    ) -> Result<Self, CoreError> {
        let mut table: Vec<Option<Vec<Letter>>> = vec![None; alphabet.size()];
        for (label, image) in rules {
            let letter = alphabet.letter(*label)?;
            table[letter as usize] = Some(alphabet.parse_word(image.as_ref())?);
        }
        let rules: Option<Vec<_>> = table.into_iter().collect();
        Substitution::new(alphabet, rules.ok_or(CoreError::MissingOrEmptyRule)?)
    }

    pub fn from_json(json: &str) -> Result<Self, CoreError> {
        let repr: SubstitutionRepr = serde_json::from_str(json)?;
        let alphabet = Alphabet::new(&repr.alphabet)?;
        let pairs: Vec<(char, String)> = repr
            .rules
            .iter()
            .map(|(k, v)| {
                let mut it = k.chars();
                match (it.next(), it.next()) {
                    (Some(c), None) => Ok((c, v.clone())),
                    _ => Err(CoreError::BadLabel(k.clone())),
                }
            })
            .collect::<Result<_, _>>()?;
        Substitution::from_rule_strings(alphabet, &pairs)
    }

    pub fn to_json(&self) -> String {
        let repr = SubstitutionRepr {
            alphabet: (0..self.alphabet.size())
                .map(|i| self.alphabet.label(i as Letter).to_string())
                .collect(),
            rules: self
                .alphabet
                .letters()
                .map(|l| {
                    (self.alphabet.label(l).to_string(), self.alphabet.format_word(self.image(l)))
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("serializable")
    }

    /// The Thue-Morse substitution `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        Substitution::from_rule_strings(Alphabet::binary(), &[('0', "01"), ('1', "10")])
            .expect("valid")
    }

    /// The Fibonacci substitution `0 -> 01, 1 -> 0`.
    pub fn fibonacci() -> Self {
        Substitution::from_rule_strings(Alphabet::binary(), &[('0', "01"), ('1', "0")])
            .expect("valid")
    }

    /// The non-minimal substitution `0 -> 010, 1 -> 11` whose subshift has
    /// complexity of order `n log log n` and a unique asymptotic component.
    pub fn nonminimal_010_11() -> Self {
        Substitution::from_rule_strings(Alphabet::binary(), &[('0', "010"), ('1', "11")])
            .expect("valid")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: Letter) -> &[Letter] {
        &self.rules[letter as usize]
    }

    pub fn rules(&self) -> &[Vec<Letter>] {
        &self.rules
    }

    pub fn apply(&self, word: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(word.len() * self.max_rule_len());
        for &l in word {
            out.extend_from_slice(self.image(l));
        }
        out
    }

    pub fn max_rule_len(&self) -> usize {
        self.rules.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_rule_len(&self) -> usize {
        self.rules.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(L)` iff all rules share length `L`.
    pub fn constant_length(&self) -> Option<usize> {
        let l = self.rules[0].len();
        self.rules.iter().all(|r| r.len() == l).then_some(l)
    }

    /// The iterated substitution `tau^n` (`n >= 1`).
    pub fn compose(&self, n: u32) -> Substitution {
        assert!(n >= 1, "compose requires n >= 1");
        let mut rules = self.rules.clone();
        for _ in 1..n {
            rules = rules.iter().map(|r| self.apply(r)).collect();
        }
        // Re-validation is unnecessary: powers of a growth-checked
        // substitution only expand.
        Substitution {
            alphabet: self.alphabet.clone(),
            rules,
            primitive: OnceLock::new(),
            bijective: OnceLock::new(),
        }
    }

    /// `outer . inner`: the substitution sending `a` to `outer(inner(a))`.
    pub fn compose_pair(outer: &Substitution, inner: &Substitution) -> Substitution {
        assert_eq!(outer.alphabet, inner.alphabet, "compose_pair needs a common alphabet");
        let rules = inner.rules.iter().map(|r| outer.apply(r)).collect();
        Substitution {
            alphabet: outer.alphabet.clone(),
            rules,
            primitive: OnceLock::new(),
            bijective: OnceLock::new(),
        }
    }

    /// True iff some power `tau^p` maps every letter to a word containing
    /// every letter. Decided by boolean reachability on the letter-occurrence
    /// matrix with the classical cutoff `(q-1)^2 + 1`.
    pub fn is_primitive(&self) -> bool {
        *self.primitive.get_or_init(|| {
            let q = self.alphabet.size();
            let occurs = |rules: &[Vec<bool>]| rules.iter().all(|row| row.iter().all(|&b| b));
            let mut m = vec![vec![false; q]; q];
            for (a, rule) in self.rules.iter().enumerate() {
                for &b in rule {
                    m[a][b as usize] = true;
                }
            }
            let base = m.clone();
            let cutoff = (q - 1) * (q - 1) + 1;
            for _ in 0..cutoff {
                if occurs(&m) {
                    return true;
                }
                let mut next = vec![vec![false; q]; q];
                for a in 0..q {
                    for b in 0..q {
                        if m[a][b] {
                            for c in 0..q {
                                if base[b][c] {
                                    next[a][c] = true;
                                }
                            }
                        }
                    }
                }
                if next == m {
                    return occurs(&m);
                }
                m = next;
            }
            occurs(&m)
        })
    }

    /// True iff constant-length and every column `a -> tau(a)_i` is a
    /// bijection of the alphabet.
    pub fn is_bijective(&self) -> bool {
        *self.bijective.get_or_init(|| {
            let Some(len) = self.constant_length() else {
                return false;
            };
            let q = self.alphabet.size();
            for i in 0..len {
                let mut seen = vec![false; q];
                for rule in &self.rules {
                    let l = rule[i] as usize;
                    if seen[l] {
                        return false;
                    }
                    seen[l] = true;
                }
            }
            true
        })
    }

    /// For a bijective substitution: the least `p >= 1` such that the
    /// first-letter and last-letter maps of `tau^p` are both the identity.
    pub fn first_last_letter_period(&self) -> Result<u32, CoreError> {
        if !self.is_bijective() {
            return Err(CoreError::NotBijective);
        }
        let first: Vec<Letter> = self.rules.iter().map(|r| r[0]).collect();
        let last: Vec<Letter> = self.rules.iter().map(|r| *r.last().unwrap()).collect();
        Ok(lcm(permutation_order(&first), permutation_order(&last)))
    }

    fn check_growth(&self) -> Result<(), CoreError> {
        // A letter fails to grow iff following single-letter rules from it
        // reaches a cycle of single-letter rules.
        for start in self.alphabet.letters() {
            let mut seen = vec![false; self.alphabet.size()];
            let mut cur = start;
            loop {
                if self.rules[cur as usize].len() > 1 {
                    break;
                }
                if seen[cur as usize] {
                    return Err(CoreError::NoGrowth(
                        self.alphabet.label(start).to_string(),
                        "single-letter rules form a cycle".to_string(),
                    ));
                }
                seen[cur as usize] = true;
                cur = self.rules[cur as usize][0];
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .alphabet
            .letters()
            .map(|l| {
                format!("{}->{}", self.alphabet.label(l), self.alphabet.format_word(self.image(l)))
            })
            .collect();
        write!(f, "Substitution({})", rules.join(", "))
    }
}

impl PartialEq for Substitution {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.rules == other.rules
    }
}
impl Eq for Substitution {}

fn permutation_order(perm: &[Letter]) -> u32 {
    let mut order = 1u32;
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thue_morse_square() {
        let tm = Substitution::thue_morse();
        let tm2 = tm.compose(2);
        assert_eq!(tm2.image(0), &[0, 1, 1, 0]);
        assert_eq!(tm2.image(1), &[1, 0, 0, 1]);
    }

    #[test]
    fn compose_one_is_identity_case() {
        let tm = Substitution::thue_morse();
        assert_eq!(tm.compose(1), tm);
    }

    #[test]
    fn nonminimal_square_by_expansion() {
        // tau^2(0) = tau(0)tau(1)tau(0) = 010 11 010
        let s = Substitution::nonminimal_010_11();
        let s2 = s.compose(2);
        assert_eq!(s.alphabet().format_word(s2.image(0)), "01011010");
        assert_eq!(s.alphabet().format_word(s2.image(1)), "1111");
    }

    #[test]
    fn primitivity() {
        assert!(Substitution::thue_morse().is_primitive());
        assert!(Substitution::fibonacci().is_primitive());
        // tau^p(1) = 1^(2^p) never contains 0.
        assert!(!Substitution::nonminimal_010_11().is_primitive());
        // 0 unreachable from 1.
        let s = Substitution::from_rule_strings(Alphabet::binary(), &[('0', "01"), ('1', "11")])
            .unwrap();
        assert!(!s.is_primitive());
    }

    #[test]
    fn bijectivity() {
        assert!(Substitution::thue_morse().is_bijective());
        assert!(!Substitution::nonminimal_010_11().is_bijective());
        let s = Substitution::from_rule_strings(Alphabet::binary(), &[('0', "00"), ('1', "10")]);
        // 0 -> 00 chains a fixed single letter? no: rule length 2, fine.
        assert!(!s.unwrap().is_bijective());
    }

    #[test]
    fn first_last_period_examples() {
        // Thue-Morse: first map is identity, last map is the transposition.
        assert_eq!(Substitution::thue_morse().first_last_letter_period().unwrap(), 2);
        // Cyclic 3-letter: last-letter map is a 3-cycle.
        let a = Alphabet::new(&["a", "b", "c"]).unwrap();
        let s =
            Substitution::from_rule_strings(a, &[('a', "abc"), ('b', "bca"), ('c', "cab")])
                .unwrap();
        assert_eq!(s.first_last_letter_period().unwrap(), 3);
        // Images starting and ending with their own letter.
        let a = Alphabet::binary();
        let s = Substitution::from_rule_strings(a, &[('0', "010"), ('1', "101")]).unwrap();
        assert!(s.is_bijective());
        assert_eq!(s.first_last_letter_period().unwrap(), 1);
        assert!(Substitution::fibonacci().first_last_letter_period().is_err());
    }

    #[test]
    fn growth_check_rejects_cycles() {
        let a = Alphabet::binary();
        assert!(Substitution::from_rule_strings(a.clone(), &[('0', "1"), ('1', "0")]).is_err());
        assert!(Substitution::from_rule_strings(a.clone(), &[('0', "0"), ('1', "01")]).is_err());
        // Single-letter rule that chains into a growing letter is fine.
        assert!(Substitution::from_rule_strings(a, &[('0', "1"), ('1', "10")]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let tm = Substitution::thue_morse();
        let json = tm.to_json();
        assert_eq!(Substitution::from_json(&json).unwrap(), tm);
        let parsed =
            Substitution::from_json(r#"{"alphabet":["0","1"],"rules":{"0":"01","1":"10"}}"#)
                .unwrap();
        assert_eq!(parsed, tm);
    }
}
