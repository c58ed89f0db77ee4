//! Plain-text graph files.
//!
//! ```text
//! # optional comments
//! p 3 2
//! e 1 2
//! e 2 3
//! w 2 -1.5
//! ```
//!
//! Vertices are 1-based in the file and 0-based in memory. Weights default to 1.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedGraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut graph: Option<Graph> = None;
    let mut weights: Vec<f64> = Vec::new();
    let mut declared_edges = 0usize;
    let mut seen_edges = 0usize;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(line_no, "second header line"));
                }
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `p <n> <m>`"));
                }
                let n = parse_count(fields[1], line_no)?;
                declared_edges = parse_count(fields[2], line_no)?;
                graph = Some(Graph::try_new(n).map_err(|e| parse_err(line_no, e.to_string()))?);
                weights = vec![1.0; n];
            }
            "e" => {
                let g = graph.as_mut().ok_or_else(|| parse_err(line_no, "edge before header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `e <u> <v>`"));
                }
                let u = parse_vertex(fields[1], g.n(), line_no)?;
                let v = parse_vertex(fields[2], g.n(), line_no)?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                if g.has_edge(u, v) {
                    return Err(parse_err(line_no, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                g.add_edge(u, v).map_err(|e| parse_err(line_no, e.to_string()))?;
                seen_edges += 1;
            }
            "w" => {
                let g = graph.as_ref().ok_or_else(|| parse_err(line_no, "weight before header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `w <v> <weight>`"));
                }
                let v = parse_vertex(fields[1], g.n(), line_no)?;
                let w: f64 = fields[2]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad weight `{}`", fields[2])))?;
                if !w.is_finite() {
                    return Err(parse_err(line_no, "weight must be finite"));
                }
                weights[v] = w;
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }

    let graph = graph.ok_or_else(|| parse_err(last_line, "missing `p <n> <m>` header"))?;
    if seen_edges != declared_edges {
        return Err(parse_err(
            last_line,
            format!("header declares {declared_edges} edges but {seen_edges} were given"),
        ));
    }
    WeightedGraph::new(graph, weights)
}

fn parse_count(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{field}`")))
}

fn parse_vertex(field: &str, n: usize, line: usize) -> Result<usize> {
    let v = parse_count(field, line)?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Like [`write_graph`], adding `w` lines for weights other than 1.
pub fn write_weighted_graph(wg: &WeightedGraph) -> String {
    let mut out = write_graph(&wg.graph);
    for (v, &w) in wg.weights.iter().enumerate() {
        if w != 1.0 {
            writeln!(out, "w {} {}", v + 1, w).unwrap();
        }
    }
    out
}
