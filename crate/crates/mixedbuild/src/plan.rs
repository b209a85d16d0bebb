use crate::debruijn::{debruijn_substitution, DeBruijnImages};
use crate::{MixedError, PhiExpr};
use serde::Serialize;
use subshift_core::Substitution;

/// One stage of the construction: the De Bruijn order `k`, the image data,
/// and the two checkpoint lengths.
pub struct Stage {
    pub index: usize,
    pub order: usize,
    pub images: DeBruijnImages,
    /// Low checkpoint: `l_i = 2 |rho^3 tau_1 ... rho^3 tau_{i-1}|`.
    pub low: u128,
    /// High checkpoint: `m_i = k_i |rho^3 tau_1 ... rho^3 tau_{i-1} rho^3|`.
    pub high: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageSummary {
    pub index: usize,
    pub order: usize,
    pub image_length: u128,
    pub low: u128,
    pub high: u128,
}

pub struct StagePlan {
    pub phi_text: String,
    pub phi: PhiExpr,
    pub stages: Vec<Stage>,
    pub prefix_budget: u128,
}

impl StagePlan {
    pub fn summaries(&self) -> Vec<StageSummary> {
        self.stages
            .iter()
            .map(|s| StageSummary {
                index: s.index,
                order: s.order,
                image_length: s.images.length,
                low: s.low,
                high: s.high,
            })
            .collect()
    }

    /// Checkpoint interleaving `l_1 < m_1 < l_2 < m_2 < ...`.
    pub fn interleaved(&self) -> bool {
        let mut points = Vec::new();
        for s in &self.stages {
            points.push(s.low);
            points.push(s.high);
        }
        points.windows(2).all(|w| w[0] < w[1])
    }
}

/// Chooses stage orders: `k_i` is minimal (and nondecreasing) with
/// `2^k >= phi(k * |rho^3 tau_1 ... rho^3 tau_{i-1} rho^3|)`.
pub fn plan_stages(
    phi_text: &str,
    stage_count: usize,
    prefix_budget: u128,
) -> Result<StagePlan, MixedError> {
    let phi = PhiExpr::parse(phi_text)?;
    if stage_count == 0 {
        return Err(MixedError::BadPhi("need at least one stage".into()));
    }
    let mut stages = Vec::new();
    // Product length of rho^3 tau_1 ... rho^3 tau_{i-1} (1 for i = 1).
    let mut before: u128 = 1;
    let mut min_order = 1usize;
    for index in 1..=stage_count {
        let base = before.checked_mul(8).ok_or(MixedError::PhiOverflow)?;
        let mut chosen = None;
        for k in min_order..=120 {
            let arg = (k as u128).checked_mul(base).ok_or(MixedError::PhiOverflow)?;
            let target = phi.eval(arg)?;
            if (1u128 << k) >= target {
                chosen = Some(k);
                break;
            }
        }
        let order = chosen.ok_or(MixedError::NoAdmissibleOrder(index))?;
        let images = debruijn_substitution(order)?;
        let low = 2 * before;
        let high = (order as u128) * base;
        stages.push(Stage { index, order, images: images.clone(), low, high });
        before = base.checked_mul(images.length).ok_or(MixedError::PhiOverflow)?;
        min_order = order;
        // Later stages only need the composed prefix substitution of the
        // *previous* stages to fit the budget; that is checked during
        // materialization where exact text sizes are known.
        let _ = prefix_budget;
    }
    let plan = StagePlan {
        phi_text: phi_text.to_string(),
        phi,
        stages,
        prefix_budget,
    };
    if !plan.interleaved() {
        return Err(MixedError::BadPhi("checkpoints failed to interleave".into()));
    }
    Ok(plan)
}

/// `rho^3`: the cube of the Thue-Morse substitution (constant length 8).
pub fn rho_cubed() -> Substitution {
    Substitution::thue_morse().compose(3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_growth_picks_order_14_then_52() {
        // Recomputed by scan: 2^k >= (8k)^2 first holds at k = 14
        // (2^13 = 8192 < 104^2 = 10816, 2^14 = 16384 >= 112^2 = 12544).
        let plan = plan_stages("n^2", 2, 10_000_000).unwrap();
        assert_eq!(plan.stages[0].order, 14);
        assert_eq!(plan.stages[0].low, 2);
        assert_eq!(plan.stages[0].high, 14 * 8);
        let l1 = plan.stages[0].images.length; // 2^14 + 14
        assert_eq!(l1, (1 << 14) + 14);
        assert_eq!(plan.stages[1].low, 2 * 8 * l1);
        let base2 = 8 * l1 * 8;
        assert_eq!(plan.stages[1].high, plan.stages[1].order as u128 * base2);
        // Stage-2 order: minimal k >= 14 with 2^k >= (k * base2)^2.
        let k2 = plan.stages[1].order;
        assert!((1u128 << k2) >= (k2 as u128 * base2).pow(2));
        assert!((1u128 << (k2 - 1)) < ((k2 as u128 - 1) * base2).pow(2));
        assert!(plan.interleaved());
    }

    #[test]
    fn linear_growth_picks_order_six() {
        // 2^k >= 8k first holds at k = 6 (64 >= 48).
        let plan = plan_stages("n", 1, 1_000_000).unwrap();
        assert_eq!(plan.stages[0].order, 6);
    }

    #[test]
    fn orders_are_nondecreasing() {
        let plan = plan_stages("n", 3, 1_000_000_000).unwrap();
        let orders: Vec<usize> = plan.stages.iter().map(|s| s.order).collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]), "{orders:?}");
    }
}
