//! Exhaustive backtracking search for `(f, N)`-colorings with exact sizes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{ColorSet, SetColoring};
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::lp::DemandFunction;
use crate::rational::{ratio, Rational};

pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

const MAX_PALETTE: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SetColoring),
    /// The whole search space was explored: no such coloring exists.
    Exhausted,
    /// Gave up after visiting `nodes` search nodes.
    BudgetExceeded { nodes: u64 },
}

impl SearchOutcome {
    pub fn coloring(&self) -> Option<&SetColoring> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for an `(f, N)`-coloring with `|psi(v)| = N·f(v)` exactly.
///
/// The search builds the coloring one color class at a time: a coloring is
/// a multiset of `N` independent sets covering every vertex `v` exactly
/// `N·f(v)` times. Colors are interchangeable, so classes are generated in
/// sorted order and each multiset is visited once. The current pivot (the
/// first vertex with unmet demand, vertices taken by descending degree) must
/// lie in the next class; all classes through the pivot are chosen before
/// moving on. A branch is cut when the unmet demand exceeds the remaining
/// classes times the independence number of the vertices that still need
/// colors, or when an edge needs more classes than remain.
pub fn search_set_coloring(
    g: &Graph,
    f: &DemandFunction,
    n: usize,
    budget: u64,
) -> Result<SearchOutcome> {
    f.check_graph(g)?;
    if n > MAX_PALETTE {
        return Err(Error::PaletteTooLarge(n));
    }
    if n == 0 {
        return Err(Error::NotCommonDenominator(n));
    }
    let scale = Rational::from_integer(BigInt::from(n));
    let mut demand = Vec::with_capacity(g.n());
    for q in f.as_slice() {
        let k = &scale * q;
        if !k.is_integer() {
            return Err(Error::NotCommonDenominator(n));
        }
        demand.push(k.to_integer().to_usize().expect("size at most N"));
    }

    let mut search = Search {
        g,
        order: vertex_order(g),
        demand,
        classes: Vec::with_capacity(n),
        n_colors: n,
        nodes: 0,
        budget,
    };
    Ok(match search.run(None) {
        Ok(true) => {
            let mut psi = vec![ColorSet::new(); g.n()];
            for (i, &class) in search.classes.iter().enumerate() {
                for v in members(class) {
                    psi[v].insert(i as u32 + 1);
                }
            }
            SearchOutcome::Found(SetColoring::new(n, psi))
        }
        Ok(false) => SearchOutcome::Exhausted,
        Err(OutOfBudget) => SearchOutcome::BudgetExceeded {
            nodes: search.nodes,
        },
    })
}

/// `(a:b)`-coloring: every vertex gets `b` of `a` colors.
pub fn search_ab_coloring(g: &Graph, a: usize, b: usize, budget: u64) -> Result<SearchOutcome> {
    if b < 1 || a < b {
        return Err(Error::InvalidAb { a, b });
    }
    let f = DemandFunction::uniform(g.n(), ratio(b as i64, a as i64))?;
    search_set_coloring(g, &f, a, budget)
}

fn vertex_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut placed = 0u64;
    while order.len() < g.n() {
        let v = members(g.vertices() & !placed)
            .max_by_key(|&v| {
                (
                    g.degree(v),
                    (g.neighbors(v) & placed).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(v);
        placed |= 1 << v;
    }
    order
}

struct OutOfBudget;

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// Unmet demand per vertex.
    demand: Vec<usize>,
    classes: Vec<VertexSet>,
    n_colors: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn needy(&self) -> VertexSet {
        (0..self.g.n())
            .filter(|&v| self.demand[v] > 0)
            .fold(0, |acc, v| acc | 1 << v)
    }

    /// `phase` is the pivot still being served and the last class chosen for it.
    fn run(&mut self, phase: Option<(usize, VertexSet)>) -> Result<bool, OutOfBudget> {
        let needy = self.needy();
        if needy == 0 {
            return Ok(true);
        }
        let remaining = self.n_colors - self.classes.len();
        let total: usize = self.demand.iter().sum();
        if members(needy).any(|v| self.demand[v] > remaining) {
            return Ok(false);
        }
        for v in members(needy) {
            for u in members(self.g.neighbors(v) & needy) {
                if u > v && self.demand[u] + self.demand[v] > remaining {
                    return Ok(false);
                }
            }
        }
        let alpha = independence_within(self.g, needy);
        if total > remaining * alpha {
            return Ok(false);
        }

        let (pivot, floor) = match phase {
            Some((p, last)) if self.demand[p] > 0 => (p, last),
            _ => (
                *self
                    .order
                    .iter()
                    .find(|&&v| self.demand[v] > 0)
                    .expect("needy vertex"),
                0,
            ),
        };
        // classes after this one can absorb at most (remaining - 1) * alpha
        let min_size = total.saturating_sub((remaining - 1) * alpha).max(1);
        let mut candidates = Vec::new();
        independent_sets_through(self.g, pivot, needy, min_size, &mut candidates);
        candidates.retain(|&c| c >= floor);
        candidates.sort_unstable();

        for class in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(OutOfBudget);
            }
            for v in members(class) {
                self.demand[v] -= 1;
            }
            self.classes.push(class);
            if self.run(Some((pivot, class)))? {
                return Ok(true);
            }
            self.classes.pop();
            for v in members(class) {
                self.demand[v] += 1;
            }
        }
        Ok(false)
    }
}

/// Independent subsets of `within` that contain `pivot` and have at least
/// `min_size` members.
fn independent_sets_through(
    g: &Graph,
    pivot: usize,
    within: VertexSet,
    min_size: usize,
    out: &mut Vec<VertexSet>,
) {
    fn go(
        g: &Graph,
        chosen: VertexSet,
        candidates: VertexSet,
        min_size: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if (chosen.count_ones() + candidates.count_ones()) < min_size as u32 {
            return;
        }
        match members(candidates).next() {
            None => out.push(chosen),
            Some(v) => {
                let rest = candidates & !(1 << v);
                go(g, chosen | 1 << v, rest & !g.neighbors(v), min_size, out);
                go(g, chosen, rest, min_size, out);
            }
        }
    }
    let candidates = within & !g.neighbors(pivot) & !(1 << pivot);
    go(g, 1 << pivot, candidates, min_size, out);
}

/// Independence number of the subgraph induced by `within`.
fn independence_within(g: &Graph, within: VertexSet) -> usize {
    if within == 0 {
        return 0;
    }
    let (v, deg) = members(within)
        .map(|v| (v, (g.neighbors(v) & within).count_ones()))
        .min_by_key(|&(_, d)| d)
        .expect("non-empty");
    if deg <= 1 {
        // some maximum independent set contains a vertex of degree <= 1
        return 1 + independence_within(g, within & !(1 << v) & !g.neighbors(v));
    }
    let (v, _) = members(within)
        .map(|v| (v, (g.neighbors(v) & within).count_ones()))
        .max_by_key(|&(_, d)| d)
        .expect("non-empty");
    let without = independence_within(g, within & !(1 << v));
    let with = 1 + independence_within(g, within & !(1 << v) & !g.neighbors(v));
    without.max(with)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_set_coloring;
    use crate::graph::{named_graph, set_of};
    use crate::structure::demand_f_b;

    #[test]
    fn independent_sets_and_alpha() {
        let c5 = named_graph("c5").unwrap();
        let mut sets = Vec::new();
        independent_sets_through(&c5, 0, 0b11111, 1, &mut sets);
        sets.sort();
        assert_eq!(sets, vec![0b00001, 0b00101, 0b01001]);
        assert_eq!(independence_within(&c5, 0b11111), 2);
        let pet = named_graph("petersen").unwrap();
        assert_eq!(independence_within(&pet, pet.vertices()), 4);
        assert_eq!(independence_within(&pet, 0b11111), 2);
    }

    #[test]
    fn c5_searches() {
        let g = named_graph("c5").unwrap();
        let f = DemandFunction::uniform(5, ratio(2, 5)).unwrap();
        let found = search_set_coloring(&g, &f, 5, DEFAULT_SEARCH_BUDGET).unwrap();
        let c = found.coloring().expect("(5:2)-coloring");
        assert!(verify_set_coloring(&g, &f, c).unwrap().is_accept());

        let f = DemandFunction::uniform(5, ratio(1, 2)).unwrap();
        assert_eq!(
            search_set_coloring(&g, &f, 2, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::Exhausted
        );

        let f = demand_f_b(&g, set_of(&[0, 2])).unwrap();
        let found = search_set_coloring(&g, &f, 14, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(verify_set_coloring(&g, &f, found.coloring().unwrap()).unwrap().is_accept());
    }

    #[test]
    fn ab_colorings() {
        let c5 = named_graph("c5").unwrap();
        assert!(search_ab_coloring(&c5, 5, 2, DEFAULT_SEARCH_BUDGET).unwrap().coloring().is_some());
        assert_eq!(
            search_ab_coloring(&c5, 12, 5, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::Exhausted
        );
        let k2 = named_graph("k2").unwrap();
        let c = search_ab_coloring(&k2, 2, 1, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(c.coloring().unwrap().psi(), &[[1].into(), [2].into()]);
        assert!(search_ab_coloring(&k2, 1, 2, 10).is_err());
        assert!(search_ab_coloring(&k2, 3, 0, 10).is_err());
    }

    #[test]
    fn budget_and_denominator() {
        let gp = named_graph("gp_7_2").unwrap();
        assert_eq!(
            search_ab_coloring(&gp, 14, 5, 3).unwrap(),
            SearchOutcome::BudgetExceeded { nodes: 4 }
        );
        let c5 = named_graph("c5").unwrap();
        let f = DemandFunction::uniform(5, ratio(2, 5)).unwrap();
        assert_eq!(search_set_coloring(&c5, &f, 7, 10), Err(Error::NotCommonDenominator(7)));
        assert_eq!(search_set_coloring(&c5, &f, 130, 10), Err(Error::PaletteTooLarge(130)));
    }
}
