//! Exact character theory and GVZ-group oracles for finite groups.
//!
//! * [`group`]: table-materialized finite groups, subgroups, classes and
//!   quotients.
//! * [`character`]: exact cyclotomic arithmetic and character tables by the
//!   modular (Dixon) method.
//! * [`analysis`]: the four GVZ oracles, the central-type character test
//!   and the supporting equivalence checks.

pub mod analysis;
pub mod character;
pub mod group;
