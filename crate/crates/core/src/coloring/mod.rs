//! Discrete `(f, N)`-colorings: each vertex receives a subset of the
//! colors `1..=N` of size at least `N·f(v)`, adjacent subsets disjoint.

mod construct;
mod extend;
mod search;

pub use construct::{lp_to_set_coloring, refine_coloring};
pub use extend::{extend_path_p3, extend_path_p4};
pub use search::{search_ab_coloring, search_set_coloring, SearchOutcome, DEFAULT_SEARCH_BUDGET};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;
use crate::lp::DemandFunction;
use crate::rational::Rational;

pub type ColorSet = BTreeSet<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetColoring {
    n_colors: usize,
    psi: Vec<ColorSet>,
}

impl SetColoring {
    /// Stores the assignment as given; [`verify_set_coloring`] reports colors
    /// outside `1..=n_colors` as malformed input.
    pub fn new(n_colors: usize, psi: Vec<ColorSet>) -> Self {
        SetColoring { n_colors, psi }
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    pub fn psi(&self) -> &[ColorSet] {
        &self.psi
    }

    pub fn colors(&self, v: usize) -> &ColorSet {
        &self.psi[v]
    }

    pub fn validate(&self) -> Result<()> {
        for (vertex, set) in self.psi.iter().enumerate() {
            if let Some(&color) = set
                .iter()
                .find(|&&c| c == 0 || c as usize > self.n_colors)
            {
                return Err(Error::ColorOutOfRange {
                    vertex,
                    color,
                    n_colors: self.n_colors,
                });
            }
        }
        Ok(())
    }

    /// Parses `N=<int>` followed by `v: c1,c2,...` lines. Unlisted vertices
    /// below the largest listed one get the empty set.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n_colors = None;
        let mut psi: Vec<ColorSet> = Vec::new();
        let mut listed = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| Error::Parse(ParseError::Coloring { line: line_no, msg });
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if n_colors.is_none() {
                let value = line
                    .strip_prefix("N=")
                    .ok_or_else(|| err("expected header `N=<int>`".into()))?;
                n_colors = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| err(format!("bad color count `{value}`")))?,
                );
                continue;
            }
            let (vertex, colors) = line
                .split_once(':')
                .ok_or_else(|| err("expected `v: c1,c2,...`".into()))?;
            let vertex: usize = vertex
                .trim()
                .parse()
                .map_err(|_| err(format!("bad vertex `{}`", vertex.trim())))?;
            if !listed.insert(vertex) {
                return Err(err(format!("vertex {vertex} listed twice")));
            }
            let mut set = ColorSet::new();
            for c in colors.split(',').map(str::trim).filter(|c| !c.is_empty()) {
                set.insert(c.parse().map_err(|_| err(format!("bad color `{c}`")))?);
            }
            if psi.len() <= vertex {
                psi.resize(vertex + 1, ColorSet::new());
            }
            psi[vertex] = set;
        }
        let n_colors = n_colors.ok_or_else(|| {
            Error::Parse(ParseError::Coloring {
                line: 0,
                msg: "missing header `N=<int>`".into(),
            })
        })?;
        Ok(SetColoring { n_colors, psi })
    }
}

impl fmt::Display for SetColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "N={}", self.n_colors)?;
        for (v, set) in self.psi.iter().enumerate() {
            let colors: Vec<String> = set.iter().map(u32::to_string).collect();
            writeln!(f, "{v}: {}", colors.join(","))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `|psi(v)| < N·f(v)`.
    Size {
        vertex: usize,
        size: usize,
        required: Rational,
    },
    /// Adjacent vertices share colors.
    Conflict {
        edge: (usize, usize),
        shared: Vec<u32>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Size {
                vertex,
                size,
                required,
            } => write!(f, "vertex {vertex} has {size} colors, needs at least {required}"),
            Violation::Conflict { edge, shared } => {
                write!(f, "edge {}-{} shares colors {shared:?}", edge.0, edge.1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Accept,
    Reject(Violation),
}

impl Verification {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verification::Accept)
    }
}

/// Checks an `(f, N)`-coloring. Size violations are reported before
/// conflicts, vertices and edges in increasing order. `N·f(v)` need not be
/// integral.
pub fn verify_set_coloring(
    g: &Graph,
    f: &DemandFunction,
    c: &SetColoring,
) -> Result<Verification> {
    f.check_graph(g)?;
    if c.psi.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: c.psi.len(),
        });
    }
    c.validate()?;
    let n_colors = Rational::from_integer(BigInt::from(c.n_colors));
    for (vertex, set) in c.psi.iter().enumerate() {
        let required = &n_colors * f.get(vertex);
        if Rational::from_integer(BigInt::from(set.len())) < required {
            return Ok(Verification::Reject(Violation::Size {
                vertex,
                size: set.len(),
                required,
            }));
        }
    }
    for (u, v) in g.edges() {
        let shared: Vec<u32> = c.psi[u].intersection(&c.psi[v]).copied().collect();
        if !shared.is_empty() {
            return Ok(Verification::Reject(Violation::Conflict {
                edge: (u, v),
                shared,
            }));
        }
    }
    Ok(Verification::Accept)
}

pub(crate) fn color_range(lo: u32, hi: u32) -> ColorSet {
    (lo..=hi).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use crate::rational::ratio;

    fn sets(list: &[&[u32]]) -> Vec<ColorSet> {
        list.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn c5_fixture() -> (Graph, DemandFunction, SetColoring) {
        let g = named_graph("c5").unwrap();
        let f = DemandFunction::uniform(5, ratio(2, 5)).unwrap();
        let c = SetColoring::new(5, sets(&[&[1, 2], &[3, 4], &[5, 1], &[2, 3], &[4, 5]]));
        (g, f, c)
    }

    #[test]
    fn verifies_c5_fixture() {
        let (g, f, c) = c5_fixture();
        assert_eq!(verify_set_coloring(&g, &f, &c).unwrap(), Verification::Accept);
    }

    #[test]
    fn conflict_reported() {
        let (g, f, mut c) = c5_fixture();
        c.psi[1] = [1, 3].into_iter().collect();
        assert_eq!(
            verify_set_coloring(&g, &f, &c).unwrap(),
            Verification::Reject(Violation::Conflict { edge: (0, 1), shared: vec![1] })
        );
    }

    #[test]
    fn size_reported() {
        let (g, f, mut c) = c5_fixture();
        c.psi[0] = [1].into_iter().collect();
        assert_eq!(
            verify_set_coloring(&g, &f, &c).unwrap(),
            Verification::Reject(Violation::Size { vertex: 0, size: 1, required: ratio(2, 1) })
        );
    }

    #[test]
    fn non_integral_requirement() {
        let g = named_graph("k2").unwrap();
        let f = DemandFunction::uniform(2, ratio(1, 3)).unwrap();
        // N·f = 4/3, so two colors are needed
        let c = SetColoring::new(4, sets(&[&[1], &[2, 3]]));
        assert!(matches!(
            verify_set_coloring(&g, &f, &c).unwrap(),
            Verification::Reject(Violation::Size { vertex: 0, .. })
        ));
    }

    #[test]
    fn malformed_inputs() {
        let (g, f, mut c) = c5_fixture();
        c.psi[3] = [6].into_iter().collect();
        assert!(matches!(
            verify_set_coloring(&g, &f, &c),
            Err(Error::ColorOutOfRange { vertex: 3, color: 6, .. })
        ));
        c.psi.pop();
        assert!(matches!(verify_set_coloring(&g, &f, &c), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn text_format() {
        let (_, _, c) = c5_fixture();
        let text = c.to_string();
        assert!(text.starts_with("N=5\n0: 1,2\n"));
        assert_eq!(SetColoring::parse(&text).unwrap(), c);
        let parsed = SetColoring::parse("# comment\nN=3\n1: 2\n").unwrap();
        assert_eq!(parsed.psi(), &sets(&[&[], &[2]])[..]);
        assert!(SetColoring::parse("0: 1\n").is_err());
        assert!(SetColoring::parse("N=3\n0: 1\n0: 2\n").is_err());
        assert!(SetColoring::parse("N=3\n0 1\n").is_err());
    }
}
