//! Exact combinatorics of spanning sets for Feigin-Stoyanovsky type subspaces
//! `W(Lambda)` of level-k standard modules of the affine Lie algebra D4(1).
//!
//! Everything is integer-exact: monomials in the six colored variable families
//! x_gamma(n), the lexicographic-from-the-right monomial order, the ten
//! difference conditions and eight initial conditions, enumeration of the
//! admissible spanning set, leading terms of the defining relations together
//! with the symbolic derivation engine that re-derives those relations, and
//! the simple-current limit construction that stabilizes spanning sets of the
//! whole module.

pub mod conditions;
pub mod enumeration;
pub mod limits;
pub mod monomial;
pub mod relations;

pub use conditions::{HighestWeight, Verdict};
pub use monomial::{Color, ColorCounts, FrequencyProfile, Monomial, ParseError, Variable};
