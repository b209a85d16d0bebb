//! Asymptotic pairs and components of substitution subshifts.
//!
//! For primitive aperiodic bijective constant-length substitutions the
//! component set is computed exactly from one-sided fixed points of a power
//! of the substitution. For everything else the left-special tree gives a
//! truncation-certified picture.

mod components;
mod fixture;
mod tails;
mod tree;

pub use components::{
    asymptotic_components_bijective, AsymptoticComponent, AsymptoticComponentSet, Exactness,
};
pub use fixture::{verify_unique_component_010_11, FixtureCheck, FixtureReport};
pub use tails::{Direction, OneSidedFixedPoint};
pub use tree::{left_special_tree, LeftSpecialTree};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AsymptoticError {
    #[error("{0}")]
    Core(#[from] subshift_core::CoreError),

    #[error("{0}")]
    Language(#[from] subshift_language::LanguageError),

    #[error("precondition failed: {0}")]
    Precondition(String),
}
