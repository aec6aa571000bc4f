use super::Graph;
use crate::error::{Error, Result};

/// Fixed labeled instances: `k2`, `path_<k>`, `cycle_<k>`, `c5`, `k4prime`,
/// `petersen`, `gp_7_2`.
pub fn named_graph(name: &str) -> Result<Graph> {
    match name {
        "k2" => Graph::from_edges(2, &[(0, 1)]),
        "c5" => cycle(5),
        "k4prime" => Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 2),
                (1, 6),
                (6, 7),
                (7, 3),
            ],
        ),
        "petersen" => generalized_petersen(5, 2),
        "gp_7_2" => generalized_petersen(7, 2),
        _ => {
            if let Some(k) = name.strip_prefix("path_") {
                let k = parse_size(name, k)?;
                if k < 2 {
                    return Err(Error::InvalidSize { family: "path".into(), size: k });
                }
                path(k)
            } else if let Some(k) = name.strip_prefix("cycle_") {
                let k = parse_size(name, k)?;
                if k < 3 {
                    return Err(Error::InvalidSize { family: "cycle".into(), size: k });
                }
                cycle(k)
            } else {
                Err(Error::UnknownGraph(name.to_string()))
            }
        }
    }
}

fn parse_size(name: &str, digits: &str) -> Result<usize> {
    digits
        .parse()
        .map_err(|_| Error::UnknownGraph(name.to_string()))
}

fn path(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

fn cycle(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

// outer cycle 0..k, spokes i-(i+k), inner edges (k+i)-(k+(i+step) mod k)
fn generalized_petersen(k: usize, step: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, i + k));
        edges.push((k + i, k + (i + step) % k));
    }
    Graph::from_edges(2 * k, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let cases = [
            ("k2", 2, 1),
            ("c5", 5, 5),
            ("k4prime", 8, 10),
            ("petersen", 10, 15),
            ("gp_7_2", 14, 21),
            ("path_4", 4, 3),
            ("cycle_9", 9, 9),
        ];
        for (name, n, m) in cases {
            let g = named_graph(name).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
        }
    }

    #[test]
    fn k4prime_degrees() {
        let g = named_graph("k4prime").unwrap();
        let mut degrees = g.degrees();
        degrees.sort();
        assert_eq!(degrees, vec![2, 2, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn gp_7_2_is_cubic() {
        let g = named_graph("gp_7_2").unwrap();
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn bad_names() {
        assert_eq!(named_graph("k5"), Err(Error::UnknownGraph("k5".into())));
        assert!(matches!(named_graph("path_1"), Err(Error::InvalidSize { .. })));
        assert!(matches!(named_graph("cycle_2"), Err(Error::InvalidSize { .. })));
        assert!(matches!(named_graph("cycle_x"), Err(Error::UnknownGraph(_))));
        assert!(matches!(named_graph("cycle_63"), Err(Error::TooManyVertices(63))));
    }
}
