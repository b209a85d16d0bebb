//! Factor languages of substitution subshifts and explicit sequences.
//!
//! The central type is [`FactorLanguage`], a memoizing oracle for the sets
//! `L_n(X)`. On top of it live complexity profiles, special words, Rauzy
//! graphs, the Morse-Hedlund periodicity check, exact visiting-time search,
//! product languages and the finite-prefix window-count checks used by the
//! mixed-complexity construction.

mod automaton;
mod cache;
mod error;
mod lemmas;
mod periodicity;
mod profile;
mod rauzy;
mod source;
mod special;
mod visiting;
pub mod windows;

pub use automaton::SuffixAutomaton;
pub use error::LanguageError;
pub use lemmas::{check_window_bound, check_window_transfer, LemmaVerdict};
pub use periodicity::PeriodicityVerdict;
pub use profile::{ComplexityProfile, ProfileExactness};
pub use rauzy::RauzyGraph;
pub use source::{load_explicit_file, product_language, FactorLanguage};
pub use special::Side;
pub use visiting::{VisitOutcome, DEFAULT_VISIT_CAP};
