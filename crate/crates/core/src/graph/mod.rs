//! Small simple graphs with 64-bit adjacency rows.

mod canon;
mod generate;
mod io;
mod mis;
mod named;
mod report;

pub use canon::{canonical_key, EXHAUSTIVE_CANON_MAX_N};
pub use generate::{enumerate_subcubic_trianglefree, random_subcubic_trianglefree, MAX_ENUMERATION_N};
pub use io::{encode_edge_list, encode_graph6, parse_edge_list, parse_graph6};
pub use mis::{
    independence_number, maximal_independent_sets, maximal_independent_sets_capped,
    DEFAULT_MIS_CAP,
};
pub use named::named_graph;
pub use report::{structural_report, Girth, StructuralReport};

use crate::error::{Error, Result};

/// Vertex subset of a [`Graph`], bit `v` set when vertex `v` is a member.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 62;

/// Iterates over the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

/// Immutable undirected simple graph on at most [`MAX_VERTICES`] vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.edge_count += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// All vertices as a set.
    pub fn vertices(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| members(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        members(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Connectivity after deleting `removed` edges (vertices are kept).
    pub fn is_connected_without(&self, removed: &[(usize, usize)]) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        let all = self.vertices();
        let mut seen = 1u64;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in members(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Induced subgraph on `set`, vertices renumbered in increasing order.
    /// Returns the subgraph and the original label of each new vertex.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = members(set & self.vertices()).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph {
            n: labels.len(),
            adj: vec![0; labels.len()],
            edge_count: 0,
        };
        for (i, &v) in labels.iter().enumerate() {
            for u in members(self.adj[v] & set) {
                g.adj[i] |= 1 << index[u];
            }
        }
        g.edge_count = g.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        (g, labels)
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices() & !(1 << v)).0
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
            g.edge_count -= 1;
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut adj = vec![0; self.n];
        for v in 0..self.n {
            for u in members(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[u];
            }
        }
        Graph {
            n: self.n,
            adj,
            edge_count: self.edge_count,
        }
    }

    /// Graph plus one new vertex joined to every member of `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        g.edge_count = self.edge_count;
        for u in members(neighbors) {
            g.insert_edge(u, self.n)?;
        }
        Ok(g)
    }

    pub(crate) fn check_vertex_set(&self, set: VertexSet) -> Result<()> {
        match members(set & !self.vertices()).next() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }
}
