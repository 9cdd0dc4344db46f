//! Exact character theory: cyclotomic values, character tables and the
//! subgroups and central data attached to a character.

mod central;
mod cyclotomic;
pub mod modp;
mod table;

use thiserror::Error;

pub use central::{center_irreducibles, CentralCharacter};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt, ParseCyclotomicError, Root};
pub use table::{class_matrices, dixon_prime, Character, CharacterTable, ClassMatrices};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    /// Internal consistency failure of the modular method. Never expected
    /// on a valid group.
    #[error("character table lifting failed: {0}")]
    LiftFailure(String),
    #[error("element {0} is not central")]
    NotCentralElement(usize),
}
