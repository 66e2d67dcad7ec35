//! Permutation statistics built from vincular patterns, bijections that
//! transport them across classes avoiding a pattern of length 3, and
//! exhaustive equidistribution checks over those classes.

pub mod bijections;
pub mod claims;
pub mod distributions;
pub mod error;
pub mod patterns;
pub mod perm;
pub mod set_stats;

pub use error::{Error, Result};
pub use perm::Perm;
