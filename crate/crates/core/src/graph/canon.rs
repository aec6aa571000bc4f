//! Canonical keys for isomorphism rejection.
//!
//! Up to [`EXHAUSTIVE_CANON_MAX_N`] vertices the key is a complete
//! invariant: an individualization-refinement search visits every leaf of
//! the search tree and keeps the largest relabeled adjacency code. Above
//! that size the key is a cheaper invariant (degrees plus distance
//! profiles) which isomorphic graphs always share but which may also
//! collide for non-isomorphic ones.

use super::{members, Graph};

pub const EXHAUSTIVE_CANON_MAX_N: usize = 10;

const MODE_EXHAUSTIVE: u8 = 0;
const MODE_INVARIANT: u8 = 1;

pub fn canonical_key(g: &Graph) -> Vec<u8> {
    if g.n() <= EXHAUSTIVE_CANON_MAX_N {
        exhaustive_key(g)
    } else {
        invariant_key(g)
    }
}

type Partition = Vec<Vec<usize>>;

fn exhaustive_key(g: &Graph) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let root = refine(g, vec![(0..g.n()).collect()]);
    search(g, root, &mut best);
    let mut key = vec![MODE_EXHAUSTIVE, g.n() as u8];
    key.extend(best.unwrap_or_default());
    key
}

fn search(g: &Graph, partition: Partition, best: &mut Option<Vec<u8>>) {
    let Some(target) = partition.iter().position(|cell| cell.len() > 1) else {
        let order: Vec<usize> = partition.iter().map(|cell| cell[0]).collect();
        let code = adjacency_code(g, &order);
        if best.as_ref().is_none_or(|b| code > *b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &partition[target] {
        let mut next = partition.clone();
        let rest: Vec<usize> = next[target].iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

/// Splits cells by neighbour counts into other cells until equitable. Cell
/// order depends only on counts, so the result is label independent.
fn refine(g: &Graph, mut partition: Partition) -> Partition {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < partition.len() {
            let splitter: u64 = partition[s].iter().fold(0, |acc, &v| acc | 1 << v);
            let mut next = Vec::with_capacity(partition.len());
            for cell in &partition {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_by_key(|&(count, _)| count);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        let mut part: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = i;
                    }
                }
            }
            if next.len() != partition.len() {
                changed = true;
                partition = next;
            } else {
                s += 1;
            }
        }
    }
    partition
}

/// Upper-triangle adjacency bits of `g` relabeled so that `order[i]` becomes
/// vertex `i`.
fn adjacency_code(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = Vec::with_capacity((n * n).div_ceil(16));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(order[i], order[j]) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    bytes
}

fn invariant_key(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut profiles: Vec<Vec<u8>> = (0..n)
        .map(|v| {
            let mut counts = vec![0u8; n + 1];
            for d in g.distances_from(v) {
                counts[d.unwrap_or(n)] += 1;
            }
            let mut profile = vec![g.degree(v) as u8];
            profile.extend(counts);
            // sorted neighbour degrees
            let mut nd: Vec<u8> = members(g.neighbors(v)).map(|u| g.degree(u) as u8).collect();
            nd.sort_unstable();
            profile.extend(nd);
            profile.push(u8::MAX);
            profile
        })
        .collect();
    profiles.sort();
    let mut key = vec![MODE_INVARIANT, n as u8, g.edge_count() as u8];
    key.extend(profiles.into_iter().flatten());
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn rotate(n: usize, shift: usize) -> Vec<usize> {
        (0..n).map(|v| (v + shift) % n).collect()
    }

    #[test]
    fn relabeled_cycle_same_key() {
        let c5 = named_graph("c5").unwrap();
        let key = canonical_key(&c5);
        let perms: [&[usize]; 3] = [&[4, 2, 0, 3, 1], &[1, 0, 2, 3, 4], &[3, 1, 4, 0, 2]];
        for p in perms {
            assert_eq!(canonical_key(&c5.permuted(p)), key);
        }
        assert_eq!(canonical_key(&c5.permuted(&rotate(5, 2))), key);
    }

    #[test]
    fn path_vs_star() {
        let p4 = named_graph("path_4").unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p4), canonical_key(&star));
        assert_ne!(
            canonical_key(&named_graph("petersen").unwrap()),
            canonical_key(&named_graph("gp_7_2").unwrap())
        );
    }

    #[test]
    fn large_graphs_use_invariant_key() {
        let g = named_graph("gp_7_2").unwrap();
        let key = canonical_key(&g);
        assert_eq!(key[0], MODE_INVARIANT);
        assert_eq!(canonical_key(&g.permuted(&rotate(14, 5))), key);
    }

    #[test]
    fn refinement_is_equitable() {
        let g = named_graph("k4prime").unwrap();
        let p = refine(&g, vec![(0..8).collect()]);
        assert_eq!(p.len(), 2);
        for cell in &p {
            for other in &p {
                let mask: u64 = other.iter().fold(0, |a, &v| a | 1 << v);
                let counts: Vec<u32> = cell.iter().map(|&v| (g.neighbors(v) & mask).count_ones()).collect();
                assert!(counts.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}
