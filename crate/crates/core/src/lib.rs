//! Domino tableaux, unequal-parameter Kazhdan–Lusztig cells and their
//! combinatorial description in type B.

pub mod analysis;
pub mod characters;
pub mod cycles;
pub mod error;
pub mod hecke;
pub mod insertion;
pub mod laurent;
pub mod partition;
pub mod report;
pub mod perm;
pub mod symbols;
pub mod tableau;

pub use error::{Error, Result};
