use std::fmt;

use super::{members, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub is_subcubic: bool,
    pub is_triangle_free: bool,
    pub girth: Girth,
    pub bridges: Vec<Edge>,
    pub is_two_edge_connected: bool,
    /// Pairs of non-bridge edges whose joint removal disconnects the graph.
    pub two_edge_cuts: Vec<(Edge, Edge)>,
    pub is_connected: bool,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let degrees = g.degrees();
    let max_degree = g.max_degree();
    let girth = girth(g);
    let is_connected = g.is_connected();
    let edges = g.edges();

    let (bridges, others): (Vec<Edge>, Vec<Edge>) = if is_connected {
        edges.iter().partition(|&&e| !g.is_connected_without(&[e]))
    } else {
        // bridges of a disconnected graph: edges whose removal adds a component
        edges.iter().partition(|&&(u, v)| {
            let h = g.without_edge(u, v);
            h.component_of(u, h.vertices()) >> v & 1 == 0
        })
    };

    let mut two_edge_cuts = Vec::new();
    if is_connected {
        for (i, &e) in others.iter().enumerate() {
            for &f in &others[i + 1..] {
                if !g.is_connected_without(&[e, f]) {
                    two_edge_cuts.push((e, f));
                }
            }
        }
    }

    StructuralReport {
        is_subcubic: max_degree <= 3,
        is_triangle_free: girth != Girth::Finite(3),
        is_two_edge_connected: is_connected && g.n() >= 2 && bridges.is_empty(),
        degrees,
        max_degree,
        girth,
        bridges,
        two_edge_cuts,
        is_connected,
    }
}

/// Shortest cycle length, via one breadth-first search per root.
pub(crate) fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for w in members(g.neighbors(u)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn cycle_report() {
        let r = structural_report(&named_graph("c5").unwrap());
        assert!(r.is_subcubic && r.is_triangle_free && r.is_connected);
        assert_eq!(r.girth, Girth::Finite(5));
        assert!(r.bridges.is_empty());
        assert!(r.is_two_edge_connected);
        // any two edges of a cycle form a cut
        assert_eq!(r.two_edge_cuts.len(), 10);
    }

    #[test]
    fn path_report() {
        let r = structural_report(&named_graph("path_4").unwrap());
        assert_eq!(r.bridges, vec![(0, 1), (1, 2), (2, 3)]);
        assert!(!r.is_two_edge_connected);
        assert_eq!(r.girth, Girth::Acyclic);
        assert!(r.two_edge_cuts.is_empty());
    }

    #[test]
    fn k4prime_report() {
        let r = structural_report(&named_graph("k4prime").unwrap());
        assert_eq!(r.girth, Girth::Finite(4));
        assert!(r.is_subcubic && r.is_triangle_free && r.is_two_edge_connected);
        assert_eq!(r.max_degree, 3);
    }

    #[test]
    fn girth_of_cycles() {
        for k in 3..=10 {
            let g = named_graph(&format!("cycle_{k}")).unwrap();
            assert_eq!(girth(&g), Girth::Finite(k));
        }
        assert_eq!(girth(&named_graph("petersen").unwrap()), Girth::Finite(5));
        assert_eq!(girth(&named_graph("gp_7_2").unwrap()), Girth::Finite(5));
    }

    #[test]
    fn disconnected_and_tiny() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let r = structural_report(&g);
        assert!(!r.is_connected);
        assert_eq!(r.bridges, vec![(3, 4)]);
        assert!(!r.is_triangle_free);
        let r1 = structural_report(&Graph::empty(1).unwrap());
        assert!(r1.is_connected && !r1.is_two_edge_connected);
        assert_eq!(r1.girth, Girth::Acyclic);
    }
}
