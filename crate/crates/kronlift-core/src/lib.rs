//! Exact computational toolkit for topological generation in the connected
//! abelian Lie groups `R^n x T^m`.
//!
//! All coordinates live in one fixed real algebraic number field, so every
//! question below is decided exactly, with no floating point on any decision
//! path:
//!
//! - does a finite set topologically generate `R^n x T^m`?
//! - what is the closure of the subgroup it generates?
//! - which elements of a generating set are redundant?
//! - given a dense pair (generators, auxiliary subgroup), how can the
//!   generators be corrected by auxiliary elements so that they generate on
//!   the nose — and when is that impossible?
//!
//! The crate also evaluates the closed-form generation/redundancy rank
//! formulas for the wider classes of Lie groups these questions reduce to,
//! and constructs the explicit families witnessing that the correction
//! bounds are sharp.

pub mod generation;
pub mod group;
pub mod lifting;
pub mod linalg;
pub mod numfield;
pub mod rational;

pub use numfield::{FieldElement, NumberField};
pub use rational::Rational;
