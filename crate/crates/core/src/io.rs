//! Text formats: graph edge lists, semidirected graphs and facet lists.
//!
//! Edge list: one edge per line as two whitespace-separated labels, a single
//! label declares a vertex, `#` starts a comment line. Semidirected graphs use
//! the same layout with `i > j` for a directed edge.

use std::fmt::Write as _;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::SemiDigraph;

/// Parses an edge list. Vertices are ordered by first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new(Vec::<String>::new())?;
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse { line: line_no, message };
        let intern = |g: &mut Graph, l: &str| -> Result<usize> {
            match g.index_of(l) {
                Some(v) => Ok(v),
                None => g.add_vertex(l).map_err(|e| err(e.to_string())),
            }
        };
        match tokens.as_slice() {
            [v] => {
                intern(&mut g, v)?;
            }
            [u, v] => {
                if u == v {
                    return Err(err(format!("loop at `{u}`")));
                }
                let a = intern(&mut g, u)?;
                let b = intern(&mut g, v)?;
                if g.has_edge(a, b) {
                    return Err(err(format!("duplicate edge {u} {v}")));
                }
                g.add_edge(a, b).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("expected one or two labels, got {}", tokens.len()))),
        }
    }
    if g.vertex_count() == 0 {
        return Err(Error::NoVertices);
    }
    Ok(g)
}

/// Writes an edge list that [`parse_edge_list`] reads back to the same graph.
///
/// Vertices are declared up front only when edge order alone would not
/// reproduce the vertex order.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut appearance = Vec::with_capacity(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    for &(u, v) in &edges {
        for w in [u, v] {
            if !seen[w] {
                seen[w] = true;
                appearance.push(w);
            }
        }
    }
    let in_order = appearance.iter().enumerate().all(|(i, &w)| i == w);
    let mut out = String::new();
    if !in_order {
        for l in g.labels() {
            let _ = writeln!(out, "{l}");
        }
    }
    for (u, v) in edges {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    if in_order {
        for w in appearance.len()..g.vertex_count() {
            let _ = writeln!(out, "{}", g.label(w));
        }
    }
    out
}

/// Writes a semidirected graph with 1-based indices; directed edges as `i > j`.
pub fn write_semidigraph(d: &SemiDigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n = {}", d.n());
    for &(i, j) in d.directed() {
        let _ = writeln!(out, "{} > {}", i + 1, j + 1);
    }
    for &(i, j) in d.undirected() {
        let _ = writeln!(out, "{} {}", i + 1, j + 1);
    }
    out
}

/// Parses the semidirected format written by [`write_semidigraph`].
pub fn parse_semidigraph(text: &str) -> Result<SemiDigraph> {
    let mut n = None;
    let mut directed = Vec::new();
    let mut undirected = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |message: String| Error::Parse { line: no + 1, message };
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(v) = rest.trim().strip_prefix("n =") {
                n = Some(v.trim().parse::<usize>().map_err(|e| err(e.to_string()))?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let idx = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(0) | Err(_) => Err(err(format!("bad index `{t}`"))),
                Ok(i) => Ok(i - 1),
            }
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [a, ">", b] => directed.push((idx(a)?, idx(b)?)),
            [a, b] => undirected.push((idx(a)?, idx(b)?)),
            _ => return Err(err(format!("malformed line `{line}`"))),
        }
    }
    let max = directed.iter().chain(&undirected).map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    SemiDigraph::new(n.unwrap_or(max), directed, undirected)
}

/// One facet per line, labels separated by spaces. The irrelevant complex `{∅}`
/// is written as a single empty line; the void complex as nothing.
pub fn write_facets(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let _ = writeln!(out, "{}", c.face_labels(*f).join(" "));
    }
    out
}

/// SHA-256 of the canonical edge list, in hex.
pub fn digest(g: &Graph) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(write_edge_list(g).as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_isolated_vertices() {
        let g = parse_edge_list("# c4\na b\nb c\n\nc d\nd a\ne\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.isolated_vertices().to_vec(), vec![4]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(parse_edge_list(""), Err(Error::NoVertices));
        assert_eq!(parse_edge_list("# nothing\n"), Err(Error::NoVertices));
        match parse_edge_list("a b\nb a\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("a b c\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list("a a\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn edge_list_round_trip_keeps_order() {
        let mut g = Graph::new(["q", "p", "r", "s", "t"]).unwrap();
        g.add_edge(2, 1).unwrap();
        g.add_edge(3, 0).unwrap();
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn semidigraph_round_trip() {
        let d = SemiDigraph::new(3, vec![(0, 1), (2, 1)], vec![(0, 2)]).unwrap();
        let text = write_semidigraph(&d);
        assert!(text.contains("1 > 2"));
        assert_eq!(parse_semidigraph(&text).unwrap(), d);
    }
}
