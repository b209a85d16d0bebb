use crate::{AutError, AutomorphismDescriptor};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use subshift_core::Letter;
use subshift_language::{FactorLanguage, VisitOutcome};

/// Growth data for the ball `B_n(S)` of products of at most `n` generators
/// and inverses, counted by evaluating each product on a word containing
/// every window of length `2nr + 1`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallGrowth {
    pub n: usize,
    /// Max effective radius over generators and their inverses.
    pub radius: usize,
    pub count: u64,
    pub visiting: VisitOutcome,
    /// `p(R''(2nr+1) - 2r)` when the visiting time is exact.
    pub bound: Option<u64>,
    pub bound_satisfied: Option<bool>,
}

/// A sliding map with explicit coordinate bookkeeping: `sigma^shift . rule`.
struct Op {
    rule: crate::LocalRule,
    shift: i64,
}

/// Evaluates ball growth. Every generator must carry a verified inverse.
pub fn ball_growth(
    generators: &[AutomorphismDescriptor],
    n: usize,
    lang: &FactorLanguage,
    visit_cap: u64,
) -> Result<BallGrowth, AutError> {
    if n == 0 {
        return Err(AutError::Precondition("ball growth needs n >= 1".into()));
    }
    let mut ops: Vec<Op> = Vec::new();
    let mut radius = 0usize;
    for g in generators {
        let inverse = g.inverse.clone().ok_or_else(|| {
            AutError::Precondition("all generators must carry verified inverses".into())
        })?;
        radius = radius.max(g.effective_radius());
        radius = radius.max(inverse.radius + g.shift_power.unsigned_abs() as usize);
        ops.push(Op { rule: g.rule.clone(), shift: g.shift_power });
        // (sigma^k . f)^-1 = f^-1 . sigma^-k.
        ops.push(Op { rule: inverse, shift: -g.shift_power });
    }
    let radius = radius.max(1);
    let order = 2 * n * radius + 1;
    let visiting = lang.visiting_time(order, visit_cap)?;
    let word = lang
        .covering_word(order)?
        .ok_or_else(|| AutError::Precondition("language has no covering word".into()))?;

    // Evaluate all products of 1..=n ops on the covering word, trimmed to a
    // common coordinate frame.
    let len = word.len() as i64;
    let margin = (n * radius) as i64;
    if len <= 2 * margin {
        return Err(AutError::Precondition("covering word shorter than the frame".into()));
    }
    let mut images: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut frontier: Vec<(Vec<Letter>, i64)> = vec![(word.clone(), 0)];
    for _depth in 1..=n {
        let mut next = Vec::new();
        for (letters, start) in &frontier {
            for op in &ops {
                let Some(applied) = op.rule.apply(letters) else {
                    return Err(AutError::Undecided(
                        "product evaluation left the certified language".into(),
                    ));
                };
                let new_start = start + op.rule.radius as i64 - op.shift;
                // Record the product's action restricted to the frame.
                let lo = margin;
                let hi = len - margin;
                let offset = lo - new_start;
                debug_assert!(offset >= 0);
                let slice =
                    applied[offset as usize..(hi - new_start) as usize].to_vec();
                images.insert(slice);
                next.push((applied, new_start));
            }
        }
        frontier = next;
    }
    let count = images.len() as u64;

    let bound = match visiting {
        VisitOutcome::Exact { length } => {
            let at = (length as usize).saturating_sub(2 * radius);
            Some(lang.profile(at)?.values[at])
        }
        _ => None,
    };
    let bound_satisfied = bound.map(|b| count <= b);
    Ok(BallGrowth { n, radius, count, visiting, bound, bound_satisfied })
}
