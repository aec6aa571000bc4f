//! Dense two-phase primal simplex with Bland's rule.
//!
//! Generic over [`LpScalar`]. With an exact scalar the returned optimum and
//! dual multipliers are exact and the pivot sequence is deterministic.

use crate::error::{Error, Result};
use crate::scalar::LpScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `row · x >= bound`
    Ge,
    /// `row · x <= bound`
    Le,
    /// `row · x == bound`
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint<T> {
    pub coefficients: Vec<T>,
    pub relation: Relation,
    pub bound: T,
}

impl<T> Constraint<T> {
    pub fn new(coefficients: Vec<T>, relation: Relation, bound: T) -> Self {
        Constraint {
            coefficients,
            relation,
            bound,
        }
    }
}

/// Optimal basic solution of `min c·x` subject to the constraints and
/// `x >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpOptimum<T> {
    pub value: T,
    pub point: Vec<T>,
    /// One multiplier per constraint, read off the final basis. Non-negative
    /// for `Ge` rows, non-positive for `Le` rows, free for `Eq` rows, and
    /// `bound · duals == value`.
    pub duals: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Optimal(LpOptimum<T>),
    Infeasible,
    Unbounded,
}

impl<T> LpOutcome<T> {
    pub fn optimal(self) -> Option<LpOptimum<T>> {
        match self {
            LpOutcome::Optimal(opt) => Some(opt),
            _ => None,
        }
    }
}

/// Minimizes `objective · x` over `x >= 0` and the given constraints.
pub fn simplex_min<T: LpScalar>(
    objective: &[T],
    constraints: &[Constraint<T>],
) -> Result<LpOutcome<T>> {
    for c in constraints {
        if c.coefficients.len() != objective.len() {
            return Err(Error::LengthMismatch {
                expected: objective.len(),
                found: c.coefficients.len(),
            });
        }
    }
    Ok(Tableau::new(objective, constraints).solve())
}

struct Tableau<T> {
    /// `rows × (columns + 1)`; the last entry of each row is the right-hand side.
    rows: Vec<Vec<T>>,
    /// Standardized columns (original, then slacks) for the dual solve.
    standard: Vec<Vec<T>>,
    basis: Vec<usize>,
    /// Original constraint index of each live row.
    origin: Vec<usize>,
    /// `-1` when the original row was negated to make its bound non-negative.
    negated: Vec<bool>,
    n_original: usize,
    n_structural: usize,
    n_constraints: usize,
    cost: Vec<T>,
}

enum Step {
    Optimal,
    Unbounded,
    Pivot(usize, usize),
}

impl<T: LpScalar> Tableau<T> {
    fn new(objective: &[T], constraints: &[Constraint<T>]) -> Self {
        let m = constraints.len();
        let n = objective.len();
        let n_slack = constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let n_structural = n + n_slack;
        let width = n_structural + m + 1;

        let mut rows = Vec::with_capacity(m);
        let mut standard = Vec::with_capacity(m);
        let mut negated = Vec::with_capacity(m);
        let mut slack = n;
        for (i, c) in constraints.iter().enumerate() {
            let flip = c.bound.is_negative_tol();
            let sign = |x: &T| if flip { -x.clone() } else { x.clone() };
            let mut row = vec![T::zero(); width];
            for (j, a) in c.coefficients.iter().enumerate() {
                row[j] = sign(a);
            }
            match c.relation {
                Relation::Ge => {
                    row[slack] = sign(&-T::one());
                    slack += 1;
                }
                Relation::Le => {
                    row[slack] = sign(&T::one());
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[n_structural + i] = T::one();
            row[width - 1] = sign(&c.bound);
            standard.push(row[..n_structural].to_vec());
            rows.push(row);
            negated.push(flip);
        }
        let mut cost = vec![T::zero(); n_structural];
        cost[..n].clone_from_slice(objective);
        Tableau {
            rows,
            standard,
            basis: (n_structural..n_structural + m).collect(),
            origin: (0..m).collect(),
            negated,
            n_original: n,
            n_structural,
            n_constraints: m,
            cost,
        }
    }

    fn rhs(&self, i: usize) -> &T {
        self.rows[i].last().expect("row has a right-hand side")
    }

    /// Reduced costs of the structural columns for `costs` (indexed over all
    /// columns, artificials included).
    fn reduced_costs(&self, costs: &dyn Fn(usize) -> T) -> Vec<T> {
        (0..self.n_structural)
            .map(|j| {
                let mut d = costs(j);
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero_tol() {
                        d = d - costs(self.basis[i]) * row[j].clone();
                    }
                }
                d
            })
            .collect()
    }

    fn choose(&self, reduced: &[T]) -> Step {
        // Bland: lowest-index improving column, ties on the ratio broken by
        // lowest basic variable index
        let Some(col) = reduced.iter().position(|d| d.is_negative_tol()) else {
            return Step::Optimal;
        };
        let mut best: Option<(usize, T)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive_tol() {
                continue;
            }
            let ratio = self.rhs(i).clone() / row[col].clone();
            let better = match &best {
                None => true,
                Some((b, r)) => {
                    ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b])
                }
            };
            if better {
                best = Some((i, ratio));
            }
        }
        match best {
            Some((row, _)) => Step::Pivot(row, col),
            None => Step::Unbounded,
        }
    }

    fn pivot(&mut self, r: usize, c: usize, reduced: Option<&mut Vec<T>>) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero_tol() {
                *x = x.clone() / p.clone();
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero_tol() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero_tol() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
        if let Some(reduced) = reduced {
            let factor = reduced[c].clone();
            if !factor.is_zero_tol() {
                for (j, d) in reduced.iter_mut().enumerate() {
                    if !pivot_row[j].is_zero_tol() {
                        *d = d.clone() - factor.clone() * pivot_row[j].clone();
                    }
                }
            }
        }
        self.basis[r] = c;
    }

    fn run(&mut self, reduced: &mut Vec<T>) -> bool {
        loop {
            match self.choose(reduced) {
                Step::Optimal => return true,
                Step::Unbounded => return false,
                Step::Pivot(r, c) => self.pivot(r, c, Some(reduced)),
            }
        }
    }

    fn solve(mut self) -> LpOutcome<T> {
        let art = self.n_structural;
        // phase one: minimize the sum of artificials
        let phase_one = |j: usize| if j >= art { T::one() } else { T::zero() };
        let mut reduced = self.reduced_costs(&phase_one);
        self.run(&mut reduced);
        let infeasibility = self
            .rows
            .iter()
            .zip(&self.basis)
            .filter(|(_, &b)| b >= art)
            .fold(T::zero(), |acc, (row, _)| acc + row.last().unwrap().clone());
        if infeasibility.is_positive_tol() {
            return LpOutcome::Infeasible;
        }

        // drive remaining (zero-level) artificials out; drop redundant rows
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < art {
                i += 1;
                continue;
            }
            match (0..art).find(|&j| !self.rows[i][j].is_zero_tol()) {
                Some(j) => {
                    self.pivot(i, j, None);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                    self.origin.remove(i);
                }
            }
        }

        let cost = self.cost.clone();
        let phase_two = |j: usize| if j < art { cost[j].clone() } else { T::zero() };
        let mut reduced = self.reduced_costs(&phase_two);
        if !self.run(&mut reduced) {
            return LpOutcome::Unbounded;
        }

        let mut point = vec![T::zero(); self.n_original];
        let mut value = T::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_original {
                point[b] = self.rhs(i).clone();
            }
            value = value + self.cost[b].clone() * self.rhs(i).clone();
        }
        let duals = self.duals();
        LpOutcome::Optimal(LpOptimum {
            value,
            point,
            duals,
        })
    }

    /// Solves `Bᵀ y = c_B` on the live rows, then maps back to the original
    /// constraint signs.
    fn duals(&self) -> Vec<T> {
        let k = self.basis.len();
        // system[r][i] = B[i][r] = standard[origin[i]][basis[r]]
        let mut system: Vec<Vec<T>> = (0..k)
            .map(|r| {
                let col = self.basis[r];
                let mut eq: Vec<T> = self
                    .origin
                    .iter()
                    .map(|&o| self.standard[o][col].clone())
                    .collect();
                eq.push(self.cost[col].clone());
                eq
            })
            .collect();
        let y = gauss_solve(&mut system);
        let mut duals = vec![T::zero(); self.n_constraints];
        for (i, &o) in self.origin.iter().enumerate() {
            duals[o] = if self.negated[o] { -y[i].clone() } else { y[i].clone() };
        }
        duals
    }
}

/// Solves a square nonsingular system given as augmented rows.
fn gauss_solve<T: LpScalar>(a: &mut [Vec<T>]) -> Vec<T> {
    let k = a.len();
    for col in 0..k {
        let p = (col..k)
            .find(|&r| !a[r][col].is_zero_tol())
            .expect("basis matrix is nonsingular");
        a.swap(col, p);
        let pv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() / pv.clone();
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero_tol() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
    }
    a.iter().map(|row| row[k].clone()).collect()
}
