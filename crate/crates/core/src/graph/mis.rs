//! Maximal independent set enumeration (Bron-Kerbosch with pivoting, run
//! on the complement adjacency).

use super::{members, Graph, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_MIS_CAP: usize = 2_000_000;

/// Every inclusion-maximal independent set, sorted by bitset value.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_independent_sets_capped(g, DEFAULT_MIS_CAP)
}

pub fn maximal_independent_sets_capped(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let all = g.vertices();
    // v's non-neighbours other than v itself
    let compatible: Vec<VertexSet> = (0..g.n())
        .map(|v| all & !g.neighbors(v) & !(1 << v))
        .collect();
    let mut out = Vec::new();
    expand(&compatible, 0, all, 0, cap, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn expand(
    compatible: &[VertexSet],
    current: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    cap: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    if candidates == 0 {
        if excluded == 0 {
            if out.len() == cap {
                return Err(Error::MisCapExceeded { cap });
            }
            out.push(current);
        }
        return Ok(());
    }
    let pivot = members(candidates | excluded)
        .max_by_key(|&u| ((candidates & compatible[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("non-empty");
    for v in members(candidates & !compatible[pivot]) {
        expand(
            compatible,
            current | 1 << v,
            candidates & compatible[v],
            excluded & compatible[v],
            cap,
            out,
        )?;
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
    Ok(())
}

/// Size of a largest independent set (0 for the empty graph).
pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(maximal_independent_sets(g)?
        .iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, set_of};

    fn brute_force(g: &Graph) -> Vec<VertexSet> {
        let all = g.vertices();
        (0..=all)
            .filter(|&s| g.is_independent(s))
            .filter(|&s| {
                members(all & !s).all(|v| !g.is_independent(s | 1 << v))
            })
            .collect()
    }

    #[test]
    fn small_cases() {
        let k2 = named_graph("k2").unwrap();
        assert_eq!(maximal_independent_sets(&k2).unwrap(), vec![0b01, 0b10]);
        let c5 = named_graph("c5").unwrap();
        let mut expected: Vec<_> = [[0, 2], [1, 3], [2, 4], [3, 0], [4, 1]]
            .iter()
            .map(|p| set_of(p))
            .collect();
        expected.sort();
        assert_eq!(maximal_independent_sets(&c5).unwrap(), expected);
        assert_eq!(maximal_independent_sets(&Graph::empty(0).unwrap()).unwrap(), vec![0]);
    }

    #[test]
    fn k4prime_matches_brute_force() {
        let g = named_graph("k4prime").unwrap();
        let sets = maximal_independent_sets(&g).unwrap();
        assert_eq!(sets, brute_force(&g));
        assert_eq!(sets.len(), 12);
        assert!(sets.iter().all(|s| matches!(s.count_ones(), 2 | 3)));
        assert_eq!(independence_number(&g).unwrap(), 3);
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&named_graph("c5").unwrap()).unwrap(), 2);
        assert_eq!(independence_number(&named_graph("petersen").unwrap()).unwrap(), 4);
        assert_eq!(independence_number(&named_graph("gp_7_2").unwrap()).unwrap(), 5);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        for k in 1..=5 {
            let g = named_graph(&format!("cycle_{}", 2 * k + 1)).unwrap();
            assert_eq!(independence_number(&g).unwrap(), k);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(4).unwrap();
        assert_eq!(maximal_independent_sets_capped(&g, 1).unwrap(), vec![0b1111]);
        let c5 = named_graph("c5").unwrap();
        assert_eq!(
            maximal_independent_sets_capped(&c5, 4),
            Err(Error::MisCapExceeded { cap: 4 })
        );
    }
}
