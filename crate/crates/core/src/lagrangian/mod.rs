//! Lagrangian terms, their component expansion, symmetry checks and
//! surface generators.

pub mod brackets;
pub mod checks;
pub mod generator;
pub mod structured;
pub mod term;
