//! Base vocabulary for substitution subshifts: alphabets, words,
//! substitutions with their structural predicates, and finite groups given
//! by Cayley tables.
//!
//! Everything here is immutable after construction and safe to share across
//! threads.

mod alphabet;
mod error;
mod group;
mod substitution;
mod word;

pub use alphabet::Alphabet;
pub use error::CoreError;
pub use group::FiniteGroup;
pub use substitution::Substitution;
pub use word::Word;

/// Letters are dense indices into an [`Alphabet`]; words are plain index
/// slices in hot paths.
pub type Letter = u8;
