//! Instance ingestion: graphs, demand functions, colorings and budgets.

use std::fs;
use std::path::Path;

use clap::Args;
use fracx_core::coloring::{SetColoring, DEFAULT_SEARCH_BUDGET};
use fracx_core::graph::{named_graph, parse_edge_list, parse_graph6, Graph};
use fracx_core::lp::DemandFunction;
use fracx_core::rational::{parse_rational, parse_vertex_values};
use fracx_core::structure::demand_f_b;

use crate::CliError;

#[derive(Args, Clone, Debug, Default)]
pub struct GraphArgs {
    /// Built-in graph: k2, c5, k4prime, petersen, gp_7_2, path_<k>, cycle_<k>
    #[arg(long)]
    pub name: Option<String>,
    /// graph6 file, or a graph6 string when no such file exists
    #[arg(long)]
    pub graph: Option<String>,
    /// Edge-list file
    #[arg(long)]
    pub edges: Option<String>,
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

impl GraphArgs {
    /// Loads the graph, preferring `--name`, then `--graph`, then `--edges`.
    /// Also returns a label for human-readable output.
    pub fn load(&self) -> Result<(Graph, String), CliError> {
        if let Some(name) = &self.name {
            return Ok((named_graph(name)?, name.clone()));
        }
        if let Some(spec) = &self.graph {
            let text = if Path::new(spec).is_file() {
                read(spec)?
            } else {
                spec.clone()
            };
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            return Ok((parse_graph6(line)?, spec.clone()));
        }
        if let Some(path) = &self.edges {
            return Ok((parse_edge_list(&read(path)?)?, path.clone()));
        }
        Err(CliError::Usage(
            "no graph given; use --name, --graph or --edges".into(),
        ))
    }
}

/// Parses `uniform:p/q`, `fb:<comma list>` or `file:<path>`.
pub fn load_demands(spec: &str, g: &Graph) -> Result<DemandFunction, CliError> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("bad demand source {spec:?}")))?;
    match kind {
        "uniform" => {
            let q = parse_rational(arg).map_err(fracx_core::Error::from)?;
            Ok(DemandFunction::uniform(g.n(), q)?)
        }
        "fb" => {
            let b = parse_vertex_list(arg)?;
            let mut set = 0u64;
            for v in b {
                if v >= g.n() {
                    return Err(fracx_core::Error::VertexOutOfRange { vertex: v, n: g.n() }.into());
                }
                set |= 1 << v;
            }
            Ok(demand_f_b(g, set)?)
        }
        "file" => {
            let values = parse_vertex_values(&read(arg)?, g.n()).map_err(fracx_core::Error::from)?;
            Ok(DemandFunction::new(values)?)
        }
        _ => Err(CliError::Usage(format!("unknown demand source {kind:?}"))),
    }
}

/// Comma-separated vertex ids; the empty string is the empty list.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?}")))
        })
        .collect()
}

pub fn load_coloring(path: &str) -> Result<SetColoring, CliError> {
    Ok(SetColoring::parse(&read(path)?)?)
}

/// The `--budget` flag, else the `FRACX_BUDGET` value, else the default.
pub fn resolve_budget(flag: Option<u64>, env: Option<&str>) -> Result<u64, CliError> {
    match (flag, env) {
        (Some(b), _) => Ok(b),
        (None, Some(text)) => text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("FRACX_BUDGET is not a node count: {text:?}"))),
        (None, None) => Ok(DEFAULT_SEARCH_BUDGET),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fracx_core::rational::ratio;

    #[test]
    fn name_wins_over_graph() {
        let args = GraphArgs {
            name: Some("c5".into()),
            graph: Some("A_".into()),
            edges: None,
        };
        assert_eq!(args.load().unwrap().0.n(), 5);
        let args = GraphArgs {
            graph: Some("A_".into()),
            ..Default::default()
        };
        assert_eq!(args.load().unwrap().0.n(), 2);
    }

    #[test]
    fn missing_graph_is_usage_error() {
        assert!(matches!(GraphArgs::default().load(), Err(CliError::Usage(_))));
    }

    #[test]
    fn demand_sources() {
        let g = named_graph("c5").unwrap();
        let f = load_demands("uniform:2/5", &g).unwrap();
        assert!(f.as_slice().iter().all(|q| *q == ratio(2, 5)));
        let f = load_demands("fb:0,2", &g).unwrap();
        assert_eq!(f.get(0), &ratio(5, 14));
        assert_eq!(f.get(1), &ratio(6, 14));
        let f = load_demands("fb:", &g).unwrap();
        assert_eq!(f.get(0), &ratio(6, 14));
        assert!(load_demands("fb:0,7", &g).is_err());
        assert!(matches!(load_demands("nope", &g), Err(CliError::Usage(_))));
        assert!(matches!(load_demands("file:/nonexistent/x", &g), Err(CliError::Input(_))));
    }

    #[test]
    fn budget_precedence() {
        assert_eq!(resolve_budget(Some(5), Some("7")).unwrap(), 5);
        assert_eq!(resolve_budget(None, Some(" 7 ")).unwrap(), 7);
        assert_eq!(resolve_budget(None, None).unwrap(), DEFAULT_SEARCH_BUDGET);
        assert!(resolve_budget(None, Some("lots")).is_err());
    }
}
