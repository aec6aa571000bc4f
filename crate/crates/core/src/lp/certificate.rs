//! Solver-independent checks of FRACC and FRACD certificates.

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::pricing::max_weight_independent_set;
use super::{DemandFunction, DualWitness, LpSolution};
use crate::graph::{members, Graph, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("support set {0:#x} is not a maximal independent set")]
    NotMaximalIndependent(VertexSet),
    #[error("support set {0:#x} listed twice")]
    DuplicateSet(VertexSet),
    #[error("support set {0:#x} has non-positive weight")]
    NonPositiveWeight(VertexSet),
    #[error("stated value {stated} but the certificate sums to {actual}")]
    ValueMismatch { stated: Rational, actual: Rational },
    #[error("vertex {vertex} is covered {covered}, below its demand {demand}")]
    Undercovered {
        vertex: usize,
        covered: Rational,
        demand: Rational,
    },
    #[error("negative dual weight at vertex {0}")]
    NegativeWeight(usize),
    #[error("independent set {set:#x} has dual weight {weight} > 1")]
    DualViolated { set: VertexSet, weight: Rational },
}

pub fn is_maximal_independent(g: &Graph, set: VertexSet) -> bool {
    g.is_independent(set) && members(g.vertices() & !set).all(|v| g.neighbors(v) & set != 0)
}

/// Checks that `sol` is a feasible FRACC point for `(g, f)` whose stated
/// value is the sum of its weights.
pub fn verify_primal(
    g: &Graph,
    f: &DemandFunction,
    sol: &LpSolution,
) -> Result<(), CertificateError> {
    if f.len() != g.n() {
        return Err(CertificateError::LengthMismatch {
            expected: g.n(),
            found: f.len(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    let mut covered = vec![Rational::zero(); g.n()];
    let mut total = Rational::zero();
    for (set, weight) in &sol.support {
        if !is_maximal_independent(g, *set) {
            return Err(CertificateError::NotMaximalIndependent(*set));
        }
        if !seen.insert(*set) {
            return Err(CertificateError::DuplicateSet(*set));
        }
        if !weight.is_positive() {
            return Err(CertificateError::NonPositiveWeight(*set));
        }
        for v in members(*set) {
            covered[v] += weight;
        }
        total += weight;
    }
    if total != sol.value {
        return Err(CertificateError::ValueMismatch {
            stated: sol.value.clone(),
            actual: total,
        });
    }
    for (vertex, c) in covered.into_iter().enumerate() {
        if c < *f.get(vertex) {
            return Err(CertificateError::Undercovered {
                vertex,
                covered: c,
                demand: f.get(vertex).clone(),
            });
        }
    }
    Ok(())
}

/// Checks that `w` is a feasible FRACD point for `(g, f)` with the stated
/// value. Feasibility is decided by a maximum-weight independent set search,
/// not by enumerating maximal independent sets.
pub fn verify_dual(
    g: &Graph,
    f: &DemandFunction,
    w: &DualWitness,
) -> Result<(), CertificateError> {
    if w.y.len() != g.n() || f.len() != g.n() {
        return Err(CertificateError::LengthMismatch {
            expected: g.n(),
            found: w.y.len().min(f.len()),
        });
    }
    if let Some(v) = w.y.iter().position(|y| y.is_negative()) {
        return Err(CertificateError::NegativeWeight(v));
    }
    let (weight, set) = max_weight_independent_set(g, &w.y);
    if weight > Rational::from_integer(1.into()) {
        return Err(CertificateError::DualViolated { set, weight });
    }
    let actual = f.pair(&w.y);
    if actual != w.value {
        return Err(CertificateError::ValueMismatch {
            stated: w.value.clone(),
            actual,
        });
    }
    Ok(())
}
