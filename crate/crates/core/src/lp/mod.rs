//! Exact linear programming for fractional colorings.

mod certificate;
mod demand;
mod frac;
mod pricing;
mod simplex;

pub use certificate::{is_maximal_independent, verify_dual, verify_primal, CertificateError};
pub use demand::DemandFunction;
pub use frac::{
    chi_f, chi_f_capped, f_coloring_feasible, f_coloring_feasible_capped, fracc_value,
    fracd_witness, solve_frac, ChiF, DualWitness, Feasibility, FracCertificates, LpSolution,
};
pub use pricing::max_weight_independent_set;
pub use simplex::{simplex_min, Constraint, LpOptimum, LpOutcome, Relation};
