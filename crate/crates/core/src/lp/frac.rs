//! FRACC / FRACD over the maximal independent sets of a graph.

use num_traits::{One, Signed, Zero};

use super::simplex::{simplex_min, Constraint, LpOutcome, Relation};
use super::DemandFunction;
use crate::error::{Error, Result};
use crate::graph::{maximal_independent_sets_capped, members, Graph, VertexSet, DEFAULT_MIS_CAP};
use crate::rational::Rational;

/// Primal FRACC solution: weights on maximal independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// Strictly positive weights, in maximal-independent-set enumeration order.
    pub support: Vec<(VertexSet, Rational)>,
}

impl LpSolution {
    /// `Σ_{I ∋ v} x(I)` for every vertex.
    pub fn coverage(&self, n: usize) -> Vec<Rational> {
        let mut covered = vec![Rational::zero(); n];
        for (set, w) in &self.support {
            for v in members(*set) {
                covered[v] += w;
            }
        }
        covered
    }
}

/// Dual FRACD solution: a non-negative vertex weighting with every maximal
/// independent set weighing at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    pub value: Rational,
    pub y: Vec<Rational>,
}

/// Both optimal certificates of one FRACC/FRACD solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracCertificates {
    pub primal: LpSolution,
    pub dual: DualWitness,
}

/// Solves FRACC for `(g, f)` and reads the FRACD optimum off the final basis.
pub fn solve_frac(g: &Graph, f: &DemandFunction, mis_cap: usize) -> Result<FracCertificates> {
    f.check_graph(g)?;
    let sets = maximal_independent_sets_capped(g, mis_cap)?;
    let objective = vec![Rational::one(); sets.len()];
    let constraints: Vec<Constraint<Rational>> = (0..g.n())
        .map(|v| {
            let row = sets
                .iter()
                .map(|&s| {
                    if s >> v & 1 == 1 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            Constraint::new(row, Relation::Ge, f.get(v).clone())
        })
        .collect();
    let optimum = match simplex_min(&objective, &constraints)? {
        LpOutcome::Optimal(opt) => opt,
        // every vertex lies in some maximal independent set and demands are
        // at most one, so FRACC is feasible; x >= 0 bounds it below
        other => unreachable!("FRACC is always feasible and bounded: {other:?}"),
    };
    let support = sets
        .into_iter()
        .zip(optimum.point)
        .filter(|(_, x)| x.is_positive())
        .collect();
    let dual = DualWitness {
        value: f.pair(&optimum.duals),
        y: optimum.duals,
    };
    Ok(FracCertificates {
        primal: LpSolution {
            value: optimum.value,
            support,
        },
        dual,
    })
}

pub fn fracc_value(g: &Graph, f: &DemandFunction) -> Result<LpSolution> {
    Ok(solve_frac(g, f, DEFAULT_MIS_CAP)?.primal)
}

pub fn fracd_witness(g: &Graph, f: &DemandFunction) -> Result<DualWitness> {
    Ok(solve_frac(g, f, DEFAULT_MIS_CAP)?.dual)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiF {
    pub value: Rational,
    pub primal: LpSolution,
    pub dual: DualWitness,
}

/// Fractional chromatic number: FRACC with every demand equal to one.
pub fn chi_f(g: &Graph) -> Result<ChiF> {
    chi_f_capped(g, DEFAULT_MIS_CAP)
}

pub fn chi_f_capped(g: &Graph, mis_cap: usize) -> Result<ChiF> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let f = DemandFunction::uniform(g.n(), Rational::one())?;
    let FracCertificates { primal, dual } = solve_frac(g, &f, mis_cap)?;
    Ok(ChiF {
        value: primal.value.clone(),
        primal,
        dual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// FRACC value at most one; the primal solution is the certificate.
    Feasible(LpSolution),
    /// FRACC value above one; a weighting `y` with `y_f > 1` that no
    /// independent set can match.
    Infeasible(DualWitness),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether `g` has an `f`-coloring.
pub fn f_coloring_feasible(g: &Graph, f: &DemandFunction) -> Result<Feasibility> {
    f_coloring_feasible_capped(g, f, DEFAULT_MIS_CAP)
}

pub fn f_coloring_feasible_capped(
    g: &Graph,
    f: &DemandFunction,
    mis_cap: usize,
) -> Result<Feasibility> {
    let FracCertificates { primal, dual } = solve_frac(g, f, mis_cap)?;
    Ok(if primal.value <= Rational::one() {
        Feasibility::Feasible(primal)
    } else {
        Feasibility::Infeasible(dual)
    })
}
