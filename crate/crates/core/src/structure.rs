//! Dangerous induced subgraphs, nails, the demand functions `f_B` and the
//! weight scores `W_v`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::lp::DemandFunction;
use crate::rational::{ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DangerousKind {
    C5,
    K4Prime,
}

/// An induced 5-cycle or induced `K'_4` (K4 with both edges of a perfect
/// matching subdivided twice).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DangerousOccurrence {
    pub kind: DangerousKind,
    pub vertices: VertexSet,
    /// Vertices of degree two inside the occurrence.
    pub special: VertexSet,
}

impl DangerousOccurrence {
    fn new(g: &Graph, kind: DangerousKind, vertices: VertexSet) -> Self {
        let special = members(vertices)
            .filter(|&v| (g.neighbors(v) & vertices).count_ones() == 2)
            .fold(0, |acc, v| acc | 1 << v);
        DangerousOccurrence {
            kind,
            vertices,
            special,
        }
    }
}

/// Every induced 5-cycle and every induced `K'_4`, each vertex set once;
/// 5-cycles first, then by bitset value.
pub fn find_dangerous_induced(g: &Graph) -> Vec<DangerousOccurrence> {
    let mut found: BTreeSet<DangerousOccurrence> = BTreeSet::new();
    for set in induced_five_cycles(g) {
        found.insert(DangerousOccurrence::new(g, DangerousKind::C5, set));
    }
    for set in induced_k4_primes(g) {
        found.insert(DangerousOccurrence::new(g, DangerousKind::K4Prime, set));
    }
    found.into_iter().collect()
}

fn induced_five_cycles(g: &Graph) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for start in 0..g.n() {
        let above = g.vertices() & !((2u64 << start) - 1);
        // paths start-a-b-c-d over vertices larger than start, closed by d ~ start
        for a in members(g.neighbors(start) & above) {
            for b in members(g.neighbors(a) & above & !(1 << a)) {
                for c in members(g.neighbors(b) & above & !(1 << a | 1 << b)) {
                    let used = 1 << a | 1 << b | 1 << c;
                    for d in members(g.neighbors(c) & g.neighbors(start) & above & !used) {
                        let set = used | 1 << d | 1 << start;
                        if g.edges_within(set) == 5 {
                            out.insert(set);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Anchored on an induced 4-cycle `a b c d` (the K4 minus the subdivided
/// matching), then looks for paths `a x y c` and `b z w d`.
fn induced_k4_primes(g: &Graph) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for a in 0..g.n() {
        for b in members(g.neighbors(a)) {
            for c in members(g.neighbors(b) & !g.neighbors(a) & !(1 << a)) {
                for d in members(g.neighbors(c) & g.neighbors(a) & !g.neighbors(b) & !(1 << b)) {
                    let cycle = 1 << a | 1 << b | 1 << c | 1 << d;
                    for x in members(g.neighbors(a) & !cycle) {
                        for y in members(g.neighbors(x) & g.neighbors(c) & !cycle) {
                            let first = cycle | 1 << x | 1 << y;
                            for z in members(g.neighbors(b) & !first) {
                                for w in members(g.neighbors(z) & g.neighbors(d) & !first) {
                                    let set = first | 1 << z | 1 << w;
                                    if set.count_ones() == 8 && g.edges_within(set) == 10 {
                                        out.insert(set);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NailReport {
    pub is_nail: bool,
    /// Members of `B` with degree above two.
    pub degree_violations: Vec<usize>,
    /// Dangerous occurrences with fewer than two `B`-safe special vertices.
    pub bad_occurrences: Vec<DangerousOccurrence>,
}

/// A special vertex is `B`-safe when it lies in `B` or has degree three.
pub fn safe_special(g: &Graph, occurrence: &DangerousOccurrence, b: VertexSet) -> VertexSet {
    members(occurrence.special)
        .filter(|&v| b >> v & 1 == 1 || g.degree(v) == 3)
        .fold(0, |acc, v| acc | 1 << v)
}

pub fn is_nail(g: &Graph, b: VertexSet) -> Result<NailReport> {
    let occurrences = find_dangerous_induced(g);
    nail_report(g, b, &occurrences)
}

/// [`is_nail`] against a precomputed occurrence list.
pub fn nail_report(
    g: &Graph,
    b: VertexSet,
    occurrences: &[DangerousOccurrence],
) -> Result<NailReport> {
    g.check_vertex_set(b)?;
    let degree_violations: Vec<usize> = members(b).filter(|&v| g.degree(v) > 2).collect();
    let bad_occurrences: Vec<DangerousOccurrence> = occurrences
        .iter()
        .filter(|h| safe_special(g, h, b).count_ones() < 2)
        .cloned()
        .collect();
    Ok(NailReport {
        is_nail: degree_violations.is_empty() && bad_occurrences.is_empty(),
        degree_violations,
        bad_occurrences,
    })
}

/// Every nail of `g`, as subsets of the vertices of degree at most two,
/// in increasing bitset order. Callers should keep the number of such
/// vertices small; the subsets are enumerated exhaustively.
pub fn enumerate_nails(g: &Graph) -> Vec<VertexSet> {
    let occurrences = find_dangerous_induced(g);
    let low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) <= 2).collect();
    let mut nails: Vec<VertexSet> = (0u64..1 << low.len())
        .map(|pick| {
            members(pick).fold(0u64, |acc, i| acc | 1 << low[i])
        })
        .filter(|&b| {
            occurrences
                .iter()
                .all(|h| safe_special(g, h, b).count_ones() >= 2)
        })
        .collect();
    nails.sort_unstable();
    nails
}

/// `(7 - deg v)/14` on `B`, `(8 - deg v)/14` elsewhere.
pub fn demand_f_b(g: &Graph, b: VertexSet) -> Result<DemandFunction> {
    g.check_vertex_set(b)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(Error::NotSubcubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let demands = (0..g.n())
        .map(|v| {
            let base = if b >> v & 1 == 1 { 7 } else { 8 };
            ratio(base - g.degree(v) as i64, 14)
        })
        .collect();
    DemandFunction::new(demands)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightScores {
    pub scores: Vec<Rational>,
    pub total: Rational,
    /// Lowest-numbered vertex of maximum score; `None` for the empty graph.
    pub argmax: Option<usize>,
}

/// `W_v = 9 w(v) - 5 Σ_{d(u,v)=1} w(u) + Σ_{d(u,v)=2} w(u)`.
pub fn weight_scores(g: &Graph, w: &[Rational]) -> Result<WeightScores> {
    if w.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: w.len(),
        });
    }
    let scores: Vec<Rational> = (0..g.n())
        .map(|v| {
            let mut score = Rational::from_integer(9.into()) * &w[v];
            for (u, d) in g.distances_from(v).into_iter().enumerate() {
                match d {
                    Some(1) => score -= Rational::from_integer(5.into()) * &w[u],
                    Some(2) => score += &w[u],
                    _ => {}
                }
            }
            score
        })
        .collect();
    let total = scores.iter().fold(Rational::zero(), |acc, s| acc + s);
    let mut argmax: Option<usize> = None;
    for (v, s) in scores.iter().enumerate() {
        if argmax.is_none_or(|best| *s > scores[best]) {
            argmax = Some(v);
        }
    }
    Ok(WeightScores {
        scores,
        total,
        argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, set_of};
    use crate::rational::int;

    fn count(occ: &[DangerousOccurrence], kind: DangerousKind) -> usize {
        occ.iter().filter(|o| o.kind == kind).count()
    }

    #[test]
    fn dangerous_in_named_graphs() {
        let c5 = find_dangerous_induced(&named_graph("c5").unwrap());
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].special, 0b11111);

        let k4p = find_dangerous_induced(&named_graph("k4prime").unwrap());
        assert_eq!(count(&k4p, DangerousKind::K4Prime), 1);
        assert_eq!(count(&k4p, DangerousKind::C5), 4);
        assert!(k4p.iter().any(|o| o.vertices == set_of(&[0, 4, 5, 2, 1])));
        let k = k4p.iter().find(|o| o.kind == DangerousKind::K4Prime).unwrap();
        assert_eq!(k.vertices, 0xFF);
        assert_eq!(k.special, set_of(&[4, 5, 6, 7]));

        let pet = find_dangerous_induced(&named_graph("petersen").unwrap());
        assert_eq!(count(&pet, DangerousKind::C5), 12);
        assert_eq!(count(&pet, DangerousKind::K4Prime), 0);
    }

    #[test]
    fn nails() {
        let k4p = named_graph("k4prime").unwrap();
        let r = is_nail(&k4p, 0).unwrap();
        assert!(!r.is_nail);
        assert_eq!(r.bad_occurrences.len(), 1);
        assert_eq!(r.bad_occurrences[0].kind, DangerousKind::K4Prime);

        let pet = named_graph("petersen").unwrap();
        assert!(is_nail(&pet, 0).unwrap().is_nail);
        let r = is_nail(&pet, set_of(&[0])).unwrap();
        assert!(!r.is_nail);
        assert_eq!(r.degree_violations, vec![0]);

        let c5 = named_graph("c5").unwrap();
        assert!(is_nail(&c5, set_of(&[0, 2])).unwrap().is_nail);
        assert!(!is_nail(&c5, set_of(&[0])).unwrap().is_nail);
        assert!(is_nail(&c5, 1 << 7).is_err());
    }

    #[test]
    fn nail_enumeration() {
        // C5: every subset of size >= 2
        assert_eq!(enumerate_nails(&named_graph("c5").unwrap()).len(), 32 - 1 - 5);
        // K'_4: subsets of the subdivision vertices with at least two members
        let k4p = enumerate_nails(&named_graph("k4prime").unwrap());
        assert_eq!(k4p.len(), 16 - 1 - 4);
        assert!(k4p.iter().all(|b| b & 0x0F == 0));
    }

    #[test]
    fn demand_values() {
        let c5 = named_graph("c5").unwrap();
        let f = demand_f_b(&c5, set_of(&[0, 2])).unwrap();
        let six = ratio(6, 14);
        assert_eq!(f.as_slice(), &[ratio(5, 14), six.clone(), ratio(5, 14), six.clone(), six]);
        let pet = named_graph("petersen").unwrap();
        assert!(demand_f_b(&pet, 0).unwrap().as_slice().iter().all(|q| *q == ratio(5, 14)));
        let p3 = named_graph("path_3").unwrap();
        assert_eq!(
            demand_f_b(&p3, 0).unwrap().as_slice(),
            &[ratio(1, 2), ratio(3, 7), ratio(1, 2)]
        );
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            demand_f_b(&star, 0),
            Err(Error::NotSubcubic { vertex: 0, degree: 4 })
        );
    }

    #[test]
    fn scores() {
        let pet = named_graph("petersen").unwrap();
        let ws = weight_scores(&pet, &vec![int(1); 10]).unwrap();
        assert!(ws.scores.iter().all(|s| s.is_zero()));
        assert_eq!(ws.total, int(0));
        assert_eq!(ws.argmax, Some(0));

        let mut w = vec![int(0); 10];
        w[0] = int(1);
        let ws = weight_scores(&pet, &w).unwrap();
        assert_eq!(ws.scores[0], int(9));
        for v in 1..10 {
            let expected = if pet.has_edge(0, v) { int(-5) } else { int(1) };
            assert_eq!(ws.scores[v], expected);
        }
        assert_eq!(ws.total, int(0));
        assert_eq!(ws.argmax, Some(0));

        let gp = named_graph("gp_7_2").unwrap();
        let ws = weight_scores(&gp, &vec![int(1); 14]).unwrap();
        assert!(ws.scores.iter().all(|s| s.is_zero()));
        assert_eq!(weight_scores(&Graph::empty(0).unwrap(), &[]).unwrap().argmax, None);
    }
}
