use crate::cache;
use crate::LanguageError;
use std::collections::BTreeSet;
use std::path::Path;
use std::sync::{Arc, Mutex};
use subshift_core::{Alphabet, Letter, Substitution};

/// A queryable oracle for the factor sets `L_n(X)` of a subshift.
///
/// Three sources are supported: a substitution (the language of `X_tau`,
/// computed by fixed-point closure), an explicit symbol sequence with a
/// declared trustworthy prefix, and finite products of other languages.
///
/// The memo is internally synchronized; a `FactorLanguage` can be shared and
/// queried from several threads.
#[derive(Clone)]
pub struct FactorLanguage {
    inner: Arc<Inner>,
}

struct Inner {
    source: Source,
    alphabet: Alphabet,
    memo: Mutex<std::collections::BTreeMap<usize, Arc<BTreeSet<Vec<Letter>>>>>,
}

enum Source {
    Substitution(Substitution),
    Explicit { symbols: Vec<Letter>, valid_prefix: usize },
    Product(Vec<FactorLanguage>),
}

impl FactorLanguage {
    pub fn from_substitution(subst: Substitution) -> Self {
        let alphabet = subst.alphabet().clone();
        FactorLanguage {
            inner: Arc::new(Inner {
                source: Source::Substitution(subst),
                alphabet,
                memo: Mutex::new(Default::default()),
            }),
        }
    }

    /// An explicit sequence source. Only the first `valid_prefix` symbols are
    /// trusted; every window count is truncated there.
    pub fn from_explicit(
        alphabet: Alphabet,
        symbols: Vec<Letter>,
        valid_prefix: usize,
    ) -> Result<Self, LanguageError> {
        let valid_prefix = valid_prefix.min(symbols.len());
        for &s in &symbols[..valid_prefix] {
            if (s as usize) >= alphabet.size() {
                return Err(subshift_core::CoreError::LetterOutOfRange {
                    index: s as usize,
                    size: alphabet.size(),
                }
                .into());
            }
        }
        Ok(FactorLanguage {
            inner: Arc::new(Inner {
                source: Source::Explicit { symbols, valid_prefix },
                alphabet,
                memo: Mutex::new(Default::default()),
            }),
        })
    }

    fn from_product(components: Vec<FactorLanguage>) -> Result<Self, LanguageError> {
        if components.len() < 2 {
            return Err(LanguageError::Precondition(
                "product language needs at least 2 components".into(),
            ));
        }
        let size: usize = components.iter().map(|c| c.alphabet().size()).product();
        let alphabet = Alphabet::canonical(size).map_err(LanguageError::Core)?;
        Ok(FactorLanguage {
            inner: Arc::new(Inner {
                source: Source::Product(components),
                alphabet,
                memo: Mutex::new(Default::default()),
            }),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn substitution(&self) -> Option<&Substitution> {
        match &self.inner.source {
            Source::Substitution(s) => Some(s),
            _ => None,
        }
    }

    pub fn explicit_prefix(&self) -> Option<(&[Letter], usize)> {
        match &self.inner.source {
            Source::Explicit { symbols, valid_prefix } => {
                Some((&symbols[..*valid_prefix], *valid_prefix))
            }
            _ => None,
        }
    }

    pub fn product_components(&self) -> Option<&[FactorLanguage]> {
        match &self.inner.source {
            Source::Product(c) => Some(c),
            _ => None,
        }
    }

    pub fn source_label(&self) -> String {
        match &self.inner.source {
            Source::Substitution(s) => format!("substitution {:?}", s),
            Source::Explicit { valid_prefix, .. } => {
                format!("explicit sequence (valid prefix {valid_prefix})")
            }
            Source::Product(c) => format!("product of {} languages", c.len()),
        }
    }

    /// Exactly `L_n(X)`.
    ///
    /// For substitutions this is the fixed-point closure: seed with the
    /// length-`n` factors of `tau^j(a)` for all letters and all `j` up to the
    /// first level where every image has length at least `n`, then close
    /// under "apply `tau`, take `n`-windows" until stable.
    pub fn factors(&self, n: usize) -> Result<Arc<BTreeSet<Vec<Letter>>>, LanguageError> {
        if let Some(hit) = self.inner.memo.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let set = match &self.inner.source {
            Source::Substitution(subst) => {
                if let Some(cached) = cache::load(subst, n) {
                    cached
                } else {
                    let set = substitution_factors(subst, n);
                    cache::store(subst, n, &set);
                    set
                }
            }
            Source::Explicit { symbols, valid_prefix } => {
                if n > *valid_prefix {
                    return Err(LanguageError::PrefixTooShort { need: n, have: *valid_prefix });
                }
                let mut set = BTreeSet::new();
                if n == 0 {
                    set.insert(Vec::new());
                } else {
                    for w in symbols[..*valid_prefix].windows(n) {
                        set.insert(w.to_vec());
                    }
                }
                set
            }
            Source::Product(components) => {
                let parts: Vec<Arc<BTreeSet<Vec<Letter>>>> =
                    components.iter().map(|c| c.factors(n)).collect::<Result<_, _>>()?;
                let strides = product_strides(components);
                let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
                // Cartesian product assembled component by component.
                for (ci, part) in parts.iter().enumerate() {
                    let mut next = Vec::new();
                    for partial in &stack {
                        for w in part.iter() {
                            let mut combined = if ci == 0 {
                                vec![0 as Letter; n]
                            } else {
                                partial.clone()
                            };
                            for (pos, &l) in w.iter().enumerate() {
                                combined[pos] += (l as usize * strides[ci]) as Letter;
                            }
                            next.push(combined);
                        }
                    }
                    stack = next;
                }
                if n == 0 {
                    stack = vec![Vec::new()];
                }
                stack.into_iter().collect::<BTreeSet<_>>()
            }
        };
        let arc = Arc::new(set);
        self.inner.memo.lock().unwrap().insert(n, arc.clone());
        Ok(arc)
    }

    /// `p_X(n)`.
    pub fn complexity(&self, n: usize) -> Result<usize, LanguageError> {
        Ok(self.factors(n)?.len())
    }

    pub fn contains(&self, w: &[Letter]) -> Result<bool, LanguageError> {
        Ok(self.factors(w.len())?.contains(w))
    }
}

/// Mixed-radix strides mapping component letters to product letters.
pub(crate) fn product_strides(components: &[FactorLanguage]) -> Vec<usize> {
    let mut strides = vec![1usize; components.len()];
    for i in (0..components.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * components[i + 1].alphabet().size();
    }
    strides
}

/// Language over the product alphabet whose `L_n` is the cartesian product
/// of the component `L_n` sets.
pub fn product_language(components: Vec<FactorLanguage>) -> Result<FactorLanguage, LanguageError> {
    FactorLanguage::from_product(components)
}

fn substitution_factors(subst: &Substitution, n: usize) -> BTreeSet<Vec<Letter>> {
    let mut set: BTreeSet<Vec<Letter>> = BTreeSet::new();
    if n == 0 {
        set.insert(Vec::new());
        return set;
    }
    // Seed from every level until all images reach length n.
    let mut images: Vec<Vec<Letter>> =
        subst.alphabet().letters().map(|a| vec![a]).collect();
    loop {
        images = images.iter().map(|w| subst.apply(w)).collect();
        for img in &images {
            for w in img.windows(n) {
                set.insert(w.to_vec());
            }
        }
        if images.iter().map(|i| i.len()).min().unwrap_or(0) >= n {
            break;
        }
    }
    // Close under "apply tau, take n-windows".
    let mut frontier: Vec<Vec<Letter>> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for w in &frontier {
            let image = subst.apply(w);
            for win in image.windows(n) {
                if set.insert(win.to_vec()) {
                    fresh.push(win.to_vec());
                }
            }
        }
        frontier = fresh;
    }
    set
}

/// Reads an explicit-sequence source file: a header line `valid_prefix=<len>`
/// followed by one line of symbols.
pub fn load_explicit_file(path: &Path) -> Result<FactorLanguage, LanguageError> {
    let content = std::fs::read_to_string(path)?;
    let mut lines = content.lines();
    let header = lines
        .next()
        .ok_or_else(|| LanguageError::BadExplicitFile("missing header line".into()))?;
    let valid_prefix: usize = header
        .strip_prefix("valid_prefix=")
        .ok_or_else(|| LanguageError::BadExplicitFile("header must be valid_prefix=<len>".into()))?
        .trim()
        .parse()
        .map_err(|e| LanguageError::BadExplicitFile(format!("bad prefix length: {e}")))?;
    let body = lines
        .next()
        .ok_or_else(|| LanguageError::BadExplicitFile("missing symbols line".into()))?
        .trim();
    let mut labels: Vec<String> = body.chars().map(|c| c.to_string()).collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    labels.sort();
    let alphabet = Alphabet::new(&labels).map_err(LanguageError::Core)?;
    let symbols = alphabet.parse_word(body).map_err(LanguageError::Core)?;
    FactorLanguage::from_explicit(alphabet, symbols, valid_prefix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(lang: &FactorLanguage, n: usize) -> Vec<String> {
        lang.factors(n)
            .unwrap()
            .iter()
            .map(|w| lang.alphabet().format_word(w))
            .collect()
    }

    #[test]
    fn thue_morse_two_factors() {
        let lang = FactorLanguage::from_substitution(Substitution::thue_morse());
        assert_eq!(words(&lang, 2), vec!["00", "01", "10", "11"]);
        assert_eq!(lang.complexity(0).unwrap(), 1);
        assert_eq!(lang.complexity(1).unwrap(), 2);
    }

    #[test]
    fn nonminimal_small_factors() {
        let lang = FactorLanguage::from_substitution(Substitution::nonminimal_010_11());
        // 00 is forbidden.
        assert_eq!(words(&lang, 2), vec!["01", "10", "11"]);
        assert_eq!(words(&lang, 3), vec!["010", "011", "101", "110", "111"]);
    }

    #[test]
    fn factors_match_brute_force_windows() {
        // Oracle: direct window enumeration on a high power.
        for subst in [
            Substitution::thue_morse(),
            Substitution::fibonacci(),
            Substitution::nonminimal_010_11(),
        ] {
            let lang = FactorLanguage::from_substitution(subst.clone());
            let mut text0 = vec![0 as Letter];
            for _ in 0..14 {
                text0 = subst.apply(&text0);
            }
            let mut text1 = vec![1 as Letter];
            for _ in 0..14 {
                text1 = subst.apply(&text1);
            }
            for n in 0..=8 {
                let mut brute: BTreeSet<Vec<Letter>> = BTreeSet::new();
                if n == 0 {
                    brute.insert(Vec::new());
                } else {
                    for w in text0.windows(n).chain(text1.windows(n)) {
                        brute.insert(w.to_vec());
                    }
                }
                assert_eq!(*lang.factors(n).unwrap(), brute, "{subst:?} n={n}");
            }
        }
    }

    #[test]
    fn explicit_source_truncates() {
        let alphabet = Alphabet::binary();
        let symbols: Vec<Letter> = [0, 1].iter().cycle().take(40).copied().collect();
        let lang = FactorLanguage::from_explicit(alphabet, symbols, 20).unwrap();
        assert_eq!(lang.complexity(2).unwrap(), 2);
        assert!(matches!(
            lang.factors(21),
            Err(LanguageError::PrefixTooShort { need: 21, have: 20 })
        ));
    }

    #[test]
    fn product_of_sturmians_multiplies() {
        let fib = FactorLanguage::from_substitution(Substitution::fibonacci());
        let prod = product_language(vec![fib.clone(), fib.clone()]).unwrap();
        // p(3) = 4 for Fibonacci, so the product has 16.
        assert_eq!(prod.complexity(3).unwrap(), 16);
        let triple = product_language(vec![fib.clone(), fib.clone(), fib]).unwrap();
        assert_eq!(triple.complexity(2).unwrap(), 27);
    }

    #[test]
    fn product_with_periodic_point_keeps_complexity() {
        let fib = FactorLanguage::from_substitution(Substitution::fibonacci());
        let constant = FactorLanguage::from_explicit(
            Alphabet::new(&["0"]).unwrap(),
            vec![0; 64],
            64,
        )
        .unwrap();
        let prod = product_language(vec![fib.clone(), constant]).unwrap();
        for n in 0..=10 {
            assert_eq!(prod.complexity(n).unwrap(), fib.complexity(n).unwrap());
        }
    }
}
