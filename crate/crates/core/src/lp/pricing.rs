//! Maximum-weight independent set by branch and bound.
//!
//! Used as an enumeration-free check of dual feasibility: a non-negative
//! vertex weighting satisfies every FRACD row exactly when no independent
//! set weighs more than one.

use num_traits::{Signed, Zero};

use crate::graph::{members, Graph, VertexSet};
use crate::rational::Rational;

/// A heaviest independent set, counting only strictly positive weights.
pub fn max_weight_independent_set(g: &Graph, weights: &[Rational]) -> (Rational, VertexSet) {
    let positive: VertexSet = (0..g.n())
        .filter(|&v| weights[v].is_positive())
        .fold(0, |acc, v| acc | 1 << v);
    let mut best = (Rational::zero(), 0);
    branch(g, weights, positive, 0, Rational::zero(), &mut best);
    best
}

fn branch(
    g: &Graph,
    weights: &[Rational],
    candidates: VertexSet,
    chosen: VertexSet,
    value: Rational,
    best: &mut (Rational, VertexSet),
) {
    if value > best.0 {
        *best = (value.clone(), chosen);
    }
    if candidates == 0 {
        return;
    }
    let bound: Rational = members(candidates).map(|v| &weights[v]).sum::<Rational>() + &value;
    if bound <= best.0 {
        return;
    }
    // branch on a candidate of maximum remaining degree
    let v = members(candidates)
        .max_by_key(|&v| (g.neighbors(v) & candidates).count_ones())
        .expect("non-empty");
    if g.neighbors(v) & candidates == 0 {
        // isolated among candidates: always take it
        let rest = candidates & !(1 << v);
        branch(g, weights, rest, chosen | 1 << v, value + &weights[v], best);
        return;
    }
    branch(
        g,
        weights,
        candidates & !(1 << v) & !g.neighbors(v),
        chosen | 1 << v,
        value.clone() + &weights[v],
        best,
    );
    branch(g, weights, candidates & !(1 << v), chosen, value, best);
}
