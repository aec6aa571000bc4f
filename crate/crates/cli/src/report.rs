//! JSON-lines rendering of solver results.

use fracx_core::coloring::SetColoring;
use fracx_core::graph::{encode_graph6, independence_number, structural_report, Girth, Graph};
use fracx_core::graph::{members, VertexSet};
use fracx_core::rational::{format_rational, Rational};
use fracx_core::Result;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Ok,
    Infeasible,
    Budget,
    Error,
}

/// One solved instance. Optional fields render as `null`.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub girth: Girth,
    /// Optimum of the covering LP. For unit demands this is the fractional
    /// chromatic number.
    pub chi_f: Option<Rational>,
    pub primal: Vec<(VertexSet, Rational)>,
    /// Dual weight per vertex; empty when no dual was computed.
    pub dual: Vec<Rational>,
    pub coloring: Option<SetColoring>,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl Report {
    /// A report with the graph fields filled in and nothing solved.
    pub fn for_graph(g: &Graph) -> Result<Self> {
        Ok(Report {
            graph: encode_graph6(g)?,
            n: g.n(),
            m: g.edge_count(),
            alpha: independence_number(g)?,
            girth: structural_report(g).girth,
            chi_f: None,
            primal: Vec::new(),
            dual: Vec::new(),
            coloring: None,
            status: Status::Ok,
            elapsed_ms: 0,
        })
    }
}

pub(crate) struct RationalStr<'a>(pub &'a Rational);

impl Serialize for RationalStr<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(self.0))
    }
}

/// Vertex-indexed rationals as a JSON object in vertex order.
pub(crate) struct VertexMap<'a>(pub &'a [Rational]);

impl Serialize for VertexMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, q) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), &RationalStr(q))?;
        }
        map.end()
    }
}

pub(crate) struct GirthJson(pub Girth);

impl Serialize for GirthJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Girth::Finite(g) => s.serialize_u64(g as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}

pub(crate) fn vertex_list(set: VertexSet) -> Vec<usize> {
    members(set).collect()
}

#[derive(Serialize)]
struct PrimalEntry<'a> {
    set: Vec<usize>,
    weight: RationalStr<'a>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    alpha: usize,
    girth: GirthJson,
    chi_f: Option<RationalStr<'a>>,
    primal: Vec<PrimalEntry<'a>>,
    dual: VertexMap<'a>,
    coloring: Option<String>,
    status: Status,
    elapsed_ms: u64,
}

/// Single-line JSON with keys in a fixed order.
pub fn render_report(r: &Report) -> String {
    let json = ReportJson {
        graph: &r.graph,
        n: r.n,
        m: r.m,
        alpha: r.alpha,
        girth: GirthJson(r.girth),
        chi_f: r.chi_f.as_ref().map(RationalStr),
        primal: r
            .primal
            .iter()
            .map(|(set, w)| PrimalEntry {
                set: vertex_list(*set),
                weight: RationalStr(w),
            })
            .collect(),
        dual: VertexMap(&r.dual),
        coloring: r.coloring.as_ref().map(|c| c.to_string()),
        status: r.status,
        elapsed_ms: r.elapsed_ms,
    };
    serde_json::to_string(&json).expect("report serializes")
}
