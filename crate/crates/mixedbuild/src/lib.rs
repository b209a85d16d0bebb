//! Builds the point `lim rho^3 tau_1 rho^3 tau_2 ... (0110^inf)`, where
//! `rho` is the Thue-Morse substitution and each `tau_i` is a De
//! Bruijn-based substitution, and certifies its checkpoints: window counts
//! stay at most `3*l_i` at the low checkpoints while reaching a prescribed
//! growth target at the high checkpoints.

mod debruijn;
mod materialize;
mod phi;
mod plan;

pub use debruijn::{debruijn_prefix, debruijn_substitution, CoverageCertificate, DeBruijnImages};
pub use materialize::{materialize_and_check, CheckpointOutcome, CheckpointReport, MixedReport};
pub use phi::PhiExpr;
pub use plan::{plan_stages, Stage, StagePlan};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MixedError {
    #[error("{0}")]
    Core(#[from] subshift_core::CoreError),

    #[error("{0}")]
    Language(#[from] subshift_language::LanguageError),

    #[error("bad growth expression: {0}")]
    BadPhi(String),

    #[error("arithmetic overflow while evaluating the growth target")]
    PhiOverflow,

    #[error("no admissible De Bruijn order found for stage {0} (growth target too steep?)")]
    NoAdmissibleOrder(usize),

    #[error("prefix budget {budget} too small: {need}")]
    Budget { budget: u128, need: String },
}
