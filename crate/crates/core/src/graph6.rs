//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the standard layout: `N(n)` followed by the upper triangle
//! of the adjacency matrix read column by column (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`), packed big-endian into six-bit groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut String) {
    let push6 = |out: &mut String, value: usize| out.push((63 + (value & 0x3f) as u8) as char);
    if n < 63 {
        push6(out, n);
    } else if n < 258_048 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

/// Encodes `graph` as a graph6 string (no header, no newline).
pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.n();
    let mut out = String::new();
    encode_order(n, &mut out);
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in graph.edges() {
        // u < v; column v, row u
        let k = v * (v - 1) / 2 + u;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|b| (b + 63) as char));
    out
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: &str| Error::Parse(format!("graph6 {text:?}: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(bad("empty")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated order"));
            }
            (rest[..6].iter().fold(0, |acc, &b| acc << 6 | six(b)), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order"));
            }
            (rest[..3].iter().fold(0, |acc, &b| acc << 6 | six(b)), &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes for n={n}, got {}", bits.div_ceil(6), body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if six(body[k / 6]) >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

/// `"n m"` header line, then one `"u v"` line per edge.
pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.n(), graph.m());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut numbers = text.split_whitespace().map(|tok| {
        tok.parse::<usize>().map_err(|_| Error::Parse(format!("edge list: bad integer {tok:?}")))
    });
    let mut next = |what: &str| {
        numbers.next().unwrap_or_else(|| Err(Error::Parse(format!("edge list: missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let edges: Vec<Edge> = (0..m).map(|_| Ok((next("endpoint")?, next("endpoint")?))).collect::<Result<_>>()?;
    if numbers.next().is_some() {
        return Err(Error::Parse(format!("edge list: more than {m} edges")));
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(to_graph6(&c3), "Bw");
        // Reference value from petgraph's graph6 test-suite.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&p2), "A_");
    }

    #[test]
    fn decode_with_header() {
        let g = from_graph6(">>graph6<<DQc\n").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn long_order_prefix() {
        let n = 70;
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        let g = Graph::new(n, &edges).unwrap();
        let s = to_graph6(&g);
        // 70 = 0*4096 + 1*64 + 6
        assert!(s.starts_with("~?@E"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("Bww").is_err());
        assert!(from_graph6("B").is_err());
        assert!(from_graph6("B\u{7f}").is_err());
        // disconnected graphs are rejected by graph validation
        assert!(matches!(from_graph6("B?"), Err(Error::Disconnected(_))));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(from_edge_list("3 1\n0 1\n1 2\n").is_err());
    }
}
