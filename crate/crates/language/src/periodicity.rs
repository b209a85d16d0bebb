use crate::{FactorLanguage, LanguageError};
use serde::{Deserialize, Serialize};

/// Morse-Hedlund verdict: `p(n) <= n` for some `n` certifies eventual
/// periodicity; otherwise aperiodicity is only certified up to the cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeriodicityVerdict {
    Periodic { witness_n: usize },
    AperiodicCertifiedUpTo { cutoff: usize },
}

impl FactorLanguage {
    pub fn is_eventually_periodic(
        &self,
        cutoff: usize,
    ) -> Result<PeriodicityVerdict, LanguageError> {
        if cutoff == 0 {
            return Err(LanguageError::Precondition("cutoff must be >= 1".into()));
        }
        for n in 1..=cutoff {
            if self.complexity(n)? <= n {
                return Ok(PeriodicityVerdict::Periodic { witness_n: n });
            }
        }
        Ok(PeriodicityVerdict::AperiodicCertifiedUpTo { cutoff })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subshift_core::{Alphabet, Substitution};

    #[test]
    fn alternating_sequence_is_periodic() {
        let symbols: Vec<u8> = [0, 1].iter().cycle().take(32).copied().collect();
        let lang = FactorLanguage::from_explicit(Alphabet::binary(), symbols, 32).unwrap();
        assert_eq!(
            lang.is_eventually_periodic(10).unwrap(),
            PeriodicityVerdict::Periodic { witness_n: 2 }
        );
    }

    #[test]
    fn constant_sequence_is_periodic_at_one() {
        let lang = FactorLanguage::from_explicit(Alphabet::binary(), vec![0; 16], 16).unwrap();
        assert_eq!(
            lang.is_eventually_periodic(10).unwrap(),
            PeriodicityVerdict::Periodic { witness_n: 1 }
        );
    }

    #[test]
    fn thue_morse_certified_aperiodic() {
        let lang = FactorLanguage::from_substitution(Substitution::thue_morse());
        assert_eq!(
            lang.is_eventually_periodic(20).unwrap(),
            PeriodicityVerdict::AperiodicCertifiedUpTo { cutoff: 20 }
        );
    }
}
