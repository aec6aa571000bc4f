//! graph6 and edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, ParseError, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes a graph6 string (single-byte size field, so `n <= 62`).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: String| Error::Parse(ParseError::Graph6(msg));

    if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} at offset {i} outside 63..=126")));
    }
    let (&size, body) = bytes
        .split_first()
        .ok_or_else(|| bad("empty input".into()))?;
    if size == 126 {
        return Err(bad("multi-byte size field (n > 62) is not supported".into()));
    }
    let n = (size - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "length field says {n} vertices, which needs {expected} data bytes, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    for pad in pairs..expected * 6 {
        if bit(pad) {
            return Err(bad("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// Canonical graph6 text without header or trailing newline.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format: a `n <count>` line, then one `u v` pair per
/// line. Everything after `#` is a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| {
            Error::Parse(ParseError::EdgeList {
                line: line_no,
                msg,
            })
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                let count = match tokens.as_slice() {
                    ["n", count] => count
                        .parse::<usize>()
                        .map_err(|_| err(format!("bad vertex count `{count}`")))?,
                    _ => return Err(err("expected header `n <count>`".into())),
                };
                graph = Some(Graph::empty(count)?);
            }
            Some(g) => {
                let (u, v) = match tokens.as_slice() {
                    [u, v] => (
                        u.parse::<usize>()
                            .map_err(|_| err(format!("bad vertex `{u}`")))?,
                        v.parse::<usize>()
                            .map_err(|_| err(format!("bad vertex `{v}`")))?,
                    ),
                    _ => return Err(err("expected `u v`".into())),
                };
                g.insert_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
        }
    }
    graph.ok_or_else(|| {
        Error::Parse(ParseError::EdgeList {
            line: 0,
            msg: "missing header `n <count>`".into(),
        })
    })
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    // Expected strings produced by networkx.to_graph6_bytes.
    #[test]
    fn graph6_reference_strings() {
        let k1 = Graph::empty(1).unwrap();
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for (g, s) in [(&k1, "@"), (&k2, "A_"), (&c5, "Dhc")] {
            assert_eq!(encode_graph6(g).unwrap(), s);
            assert_eq!(&parse_graph6(s).unwrap(), g);
        }
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(
            encode_graph6(&named_graph("petersen").unwrap()).unwrap(),
            "IheA@GUAo"
        );
        assert_eq!(
            encode_graph6(&named_graph("gp_7_2").unwrap()).unwrap(),
            "MhCKK@?GO`@A@Q?h?"
        );
    }

    #[test]
    fn graph6_header_and_newline() {
        let g = parse_graph6(">>graph6<<Dhc\n").unwrap();
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        // 5 vertices need 2 data bytes
        assert!(parse_graph6("Dh").is_err());
        assert!(parse_graph6("Dhcc").is_err());
        // last byte of C5 has 2 padding bits; 'd' sets one of them
        assert!(parse_graph6("Dhd").is_err());
        assert!(parse_graph6("D h").is_err());
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn edge_list_parse() {
        let text = "# a path\nn 3\n0 1  # first\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("n 2\n0 2\n").is_err());
        assert!(parse_edge_list("n 2\n0\n").is_err());
        assert!(parse_edge_list("# nothing\n").is_err());
    }
}
