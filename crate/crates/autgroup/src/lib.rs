//! Automorphism groups of subshifts.
//!
//! For primitive aperiodic bijective constant-length substitutions the
//! quotient by the shift is enumerated exactly from radius-0 local rules
//! commuting with the substitution. For other subshifts a bounded
//! Curtis-Hedlund-Lyndon search over local rules gives tiered results:
//! candidates passing necessary checks, individually certified
//! automorphisms (verified inverse), or the certified-total quotient.

mod action;
mod ball;
mod descriptor;
pub mod groups;
mod quotient;
mod radius_zero;
mod search;

pub use action::{action_on_components, ComponentAction};
pub use ball::{ball_growth, BallGrowth};
pub use descriptor::{AutomorphismDescriptor, CertStatus, LocalRule};
pub use quotient::QuotientGroupPresentation;
pub use radius_zero::radius_zero_automorphisms;
pub use search::{search_automorphisms, SearchConfig};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AutError {
    #[error("{0}")]
    Core(#[from] subshift_core::CoreError),

    #[error("{0}")]
    Language(#[from] subshift_language::LanguageError),

    #[error("{0}")]
    Asymptotic(#[from] subshift_asymptotic::AsymptoticError),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("rule space too large: {0}")]
    RuleSpace(String),

    #[error("action undecided: {0}")]
    Undecided(String),
}
