//! Certification report for the non-minimal fixture `0 -> 010, 1 -> 11`:
//! forbidden words, the shape of deep left-special words, and uniqueness of
//! block desubstitution. Together these pin down the unique asymptotic
//! component with right tail `1^inf`.

use crate::{left_special_tree, AsymptoticError, Direction, OneSidedFixedPoint};
use serde::{Deserialize, Serialize};
use subshift_core::{Letter, Substitution};
use subshift_language::FactorLanguage;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureReport {
    pub depth: usize,
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The words that never occur in this subshift. `00` and `11011` cannot be
/// spelled from the blocks `010`/`11` at all; `01010` would put two `010`
/// blocks at odd distance. (`1010` itself does occur, inside `tau^2(0) =
/// 01011010`.)
pub const FORBIDDEN_WORDS: [&str; 3] = ["00", "01010", "11011"];

pub fn verify_unique_component_010_11(
    depth: usize,
    sample_count: usize,
    forbidden_scan_len: usize,
) -> Result<FixtureReport, AsymptoticError> {
    let tau = Substitution::nonminimal_010_11();
    let lang = FactorLanguage::from_substitution(tau.clone());
    let alphabet = tau.alphabet().clone();
    let mut checks = Vec::new();

    // (a) Forbidden words are absent from every computed factor set.
    {
        let forbidden: Vec<Vec<Letter>> = FORBIDDEN_WORDS
            .iter()
            .map(|w| alphabet.parse_word(w).expect("valid"))
            .collect();
        let mut offenders = Vec::new();
        for n in 1..=forbidden_scan_len {
            let factors = lang.factors(n)?;
            for f in factors.iter() {
                for bad in &forbidden {
                    if bad.len() <= f.len()
                        && f.windows(bad.len()).any(|w| w == bad.as_slice())
                    {
                        offenders.push((n, alphabet.format_word(f)));
                    }
                }
            }
        }
        checks.push(FixtureCheck {
            name: "forbidden-words".into(),
            pass: offenders.is_empty(),
            detail: if offenders.is_empty() {
                format!(
                    "{:?} absent from all factors up to length {forbidden_scan_len}",
                    FORBIDDEN_WORDS
                )
            } else {
                format!("offending factors: {offenders:?}")
            },
        });
    }

    // (b) Every left-special word (up to the probed depth) is a 1-run
    // followed by a prefix of the rightward fixed point of 0, i.e. a window
    // of the single point 1^-inf . tau^inf(0). This is the finite-depth
    // shadow of the unique asymptotic component: all branching happens along
    // that one orbit.
    {
        let fixed = OneSidedFixedPoint::new(tau.clone(), 1, 0, Direction::Right)?;
        let expansion = fixed.expand(depth);
        let tree = left_special_tree(&lang, depth)?;
        let mut misfits = Vec::new();
        for level in &tree.levels {
            for w in level.keys() {
                let ones = w.iter().take_while(|&&l| l == 1).count();
                let rest = &w[ones..];
                if rest != &expansion[..rest.len()] {
                    misfits.push(alphabet.format_word(w));
                }
            }
        }
        checks.push(FixtureCheck {
            name: "left-special-shape".into(),
            pass: misfits.is_empty(),
            detail: if misfits.is_empty() {
                format!(
                    "all left-special words up to length {depth} are 1-runs followed by a \
                     prefix of the fixed point of 0"
                )
            } else {
                format!("words outside the expected shape: {misfits:?}")
            },
        });
    }

    // (c) Unique desubstitution on sampled words.
    {
        let factors = lang.factors(30)?;
        let anchored: Vec<&Vec<Letter>> = factors
            .iter()
            .filter(|w| w.windows(3).any(|v| v == [0, 1, 0]))
            .collect();
        let mut sampled = Vec::new();
        if !anchored.is_empty() {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..sample_count {
                // splitmix64 step; deterministic sampling.
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^= z >> 31;
                sampled.push(anchored[(z % anchored.len() as u64) as usize]);
            }
        }
        let mut ambiguous = Vec::new();
        for w in &sampled {
            let parses = block_parses(w);
            if parses.len() != 1 {
                ambiguous.push((alphabet.format_word(w), parses.len()));
            }
        }
        // The all-ones fixed point has phase-ambiguous finite parses but a
        // unique point preimage: all its parses desubstitute to runs of 1.
        let all_ones = vec![1 as Letter; 30];
        let ones_ok = factors.contains(&all_ones)
            && block_parses(&all_ones).iter().all(|(_, inner)| inner.iter().all(|&l| l == 1));
        checks.push(FixtureCheck {
            name: "desubstitution-uniqueness".into(),
            pass: ambiguous.is_empty() && ones_ok,
            detail: if ambiguous.is_empty() && ones_ok {
                format!(
                    "unique block parse on {} sampled words; all-ones parses collapse",
                    sampled.len()
                )
            } else {
                format!("ambiguous parses: {ambiguous:?}, all-ones ok: {ones_ok}")
            },
        });
    }

    Ok(FixtureReport { depth, checks })
}

/// All ways to read `w` as (proper suffix of a block)(blocks)*(proper
/// prefix of a block) over the blocks `010 -> 0` and `11 -> 1`. Blocks
/// start with distinct letters, so the tiling after the lead is forced;
/// only the lead length can vary. Returns `(lead_len, inner word)` pairs.
pub fn block_parses(w: &[Letter]) -> Vec<(usize, Vec<Letter>)> {
    const BLOCKS: [&[Letter]; 2] = [&[0, 1, 0], &[1, 1]];
    let mut leads: Vec<usize> = vec![0];
    for block in BLOCKS {
        for lead_len in 1..block.len() {
            if w.len() >= lead_len && block[block.len() - lead_len..] == w[..lead_len] {
                leads.push(lead_len);
            }
        }
    }
    leads.sort_unstable();
    leads.dedup();
    let mut parses = Vec::new();
    'lead: for lead_len in leads {
        let mut pos = lead_len;
        let mut inner = Vec::new();
        while pos < w.len() {
            let block_idx = match w[pos] {
                0 => 0,
                _ => 1,
            };
            let block = BLOCKS[block_idx];
            let end = pos + block.len();
            if end <= w.len() {
                if w[pos..end] != *block {
                    continue 'lead;
                }
                inner.push(block_idx as Letter);
                pos = end;
            } else {
                // Trailer must be a proper prefix of the block.
                if block[..w.len() - pos] != w[pos..] {
                    continue 'lead;
                }
                pos = w.len();
            }
        }
        parses.push((lead_len, inner));
    }
    parses
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        let report = verify_unique_component_010_11(20, 100, 12).unwrap();
        for check in &report.checks {
            assert!(check.pass, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn square_of_zero_parses_uniquely() {
        // tau^2(0) = 01011010 = [010][11][010].
        let w = vec![0, 1, 0, 1, 1, 0, 1, 0];
        let parses = block_parses(&w);
        assert_eq!(parses.len(), 1);
        assert_eq!(parses[0].0, 0);
        assert_eq!(parses[0].1, vec![0, 1, 0]);
    }

    #[test]
    fn all_ones_has_phase_ambiguity_only() {
        let w = vec![1; 30];
        let parses = block_parses(&w);
        assert!(parses.len() > 1);
        for (_, inner) in parses {
            assert!(inner.iter().all(|&l| l == 1));
        }
    }

    #[test]
    fn forbidden_words_really_absent_but_1010_present() {
        let lang = FactorLanguage::from_substitution(Substitution::nonminimal_010_11());
        let alphabet = lang.alphabet().clone();
        for bad in FORBIDDEN_WORDS {
            let w = alphabet.parse_word(bad).unwrap();
            assert!(!lang.contains(&w).unwrap(), "{bad} should be forbidden");
        }
        // 1010 occurs inside tau^2(0) = 01011010 and survives in the
        // subshift, so it is not on the forbidden list.
        assert!(lang.contains(&[1, 0, 1, 0]).unwrap());
    }
}
