//! Exact fractional colorings of small graphs.
//!
//! The crate computes fractional chromatic numbers and weighted
//! fractional colorings with exact rational linear programming over
//! maximal independent sets, and certifies every answer: a primal cover
//! of the demands, a dual vertex weighting of equal value, and a discrete
//! set coloring built from the primal. It also implements the structural
//! notions used for subcubic triangle-free graphs (dangerous induced
//! subgraphs, nails, the demand functions `f_B`, and the weight scores
//! `W_v`) together with exhaustive search for `(f, N)`- and
//! `(a:b)`-colorings.
//!
//! The simplex solver is generic over [`LpScalar`]; graph-level APIs use the
//! exact [`Rational`] instantiation.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod lp;
pub mod rational;
pub mod scalar;
pub mod structure;

pub use error::{Error, ParseError, Result};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
pub use scalar::LpScalar;

/// Exact simplex outcome.
pub type RationalLpOutcome = lp::LpOutcome<Rational>;
/// Exact simplex constraint row.
pub type RationalConstraint = lp::Constraint<Rational>;
/// Floating point simplex outcome, for callers that do not need certificates.
pub type F64LpOutcome = lp::LpOutcome<f64>;
