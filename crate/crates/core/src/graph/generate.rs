//! Connected subcubic triangle-free graphs: exhaustive and random.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{canonical_key, Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_N: usize = 10;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with maximum degree at most 3 and no triangle, ordered by
/// canonical key.
///
/// Every such graph on `k + 1` vertices arises from one on `k` vertices by
/// adding a vertex (a leaf of a spanning tree keeps the rest connected), so
/// the classes are grown one vertex at a time and deduplicated by key.
pub fn enumerate_subcubic_trianglefree(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::GeneratorRange {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let single = Graph::empty(1)?;
    level.insert(canonical_key(&single), single);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let open: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
            for nbrs in independent_subsets(g, &open, 3) {
                let h = g.with_new_vertex(nbrs)?;
                next.entry(canonical_key(&h)).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level.into_values())
}

/// Non-empty independent subsets of `pool` with at most `max` members.
fn independent_subsets(g: &Graph, pool: &[usize], max: usize) -> Vec<VertexSet> {
    fn go(g: &Graph, pool: &[usize], max: usize, chosen: VertexSet, out: &mut Vec<VertexSet>) {
        for (i, &v) in pool.iter().enumerate() {
            if g.neighbors(v) & chosen != 0 {
                continue;
            }
            let with = chosen | 1 << v;
            out.push(with);
            if with.count_ones() < max as u32 {
                go(g, &pool[i + 1..], max, with, out);
            }
        }
    }
    let mut out = Vec::new();
    go(g, pool, max, 0, &mut out);
    out
}

/// A connected subcubic triangle-free graph on `n` vertices, fully
/// determined by `(n, seed)`.
///
/// A random spanning tree with degrees at most 3 keeps the result connected;
/// extra edges are then offered in random order and rejected when they would
/// exceed degree 3 or close a triangle. Labels are shuffled at the end.
pub fn random_subcubic_trianglefree(n: usize, seed: u64) -> Result<Graph> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::GeneratorRange { n, max: MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| g.degree(u) < 3).collect();
        let u = *open.choose(&mut rng).expect("a tree always has a vertex of degree < 3");
        g.insert_edge(u, v)?;
    }

    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    candidates.shuffle(&mut rng);
    let attempts = rng.gen_range(0..=candidates.len());
    for &(u, v) in &candidates[..attempts] {
        if g.degree(u) < 3 && g.degree(v) < 3 && g.neighbors(u) & g.neighbors(v) == 0 {
            g.insert_edge(u, v)?;
        }
    }

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    Ok(g.permuted(&perm))
}
