//! Wire formats: graph6 text, edge-list JSON, and DOT export.
//!
//! graph6 follows the published byte encoding exactly: N(n) followed by the
//! upper triangle of the adjacency matrix in column order, packed into 6-bit
//! groups (high bit first) and offset by 63. The `>>graph6<<` header is
//! accepted on input and never emitted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{GraphError, LoopWeightedGraph, Vertex};
use crate::ratio;

const G6_HEADER: &str = ">>graph6<<";

fn encode_order(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![63 + n as u8]
    } else if n <= 258_047 {
        vec![
            126,
            63 + ((n >> 12) & 63) as u8,
            63 + ((n >> 6) & 63) as u8,
            63 + (n & 63) as u8,
        ]
    } else {
        let mut out = vec![126, 126];
        for shift in (0..6).rev() {
            out.push(63 + ((n >> (6 * shift)) & 63) as u8);
        }
        out
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
    let digit = |b: u8| -> Result<usize, GraphError> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(bad(&format!("byte {b} outside the printable range 63..=126")))
        }
    };
    match bytes {
        [] => Err(bad("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte order"));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = (n << 6) | digit(b)?;
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte order"));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = (n << 6) | digit(b)?;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((digit(*b)?, 1)),
    }
}

/// Encodes a loopless graph as a graph6 line (no trailing newline).
pub fn write_graph6(g: &LoopWeightedGraph) -> Result<String, GraphError> {
    if !g.is_loopless() {
        return Err(GraphError::LoopsNotRepresentable);
    }
    let n = g.n();
    let mut out = encode_order(n);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(63 + group);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses one graph6 line; the optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<LoopWeightedGraph, GraphError> {
    let bad = |msg: String| GraphError::MalformedGraph6(msg);
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(G6_HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    let (n, consumed) = decode_order(bytes)?;
    let body = &bytes[consumed..];
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(bad(format!(
            "expected {nbytes} adjacency bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = LoopWeightedGraph::empty(n);
    let mut bit_index = 0;
    let bit_of = |idx: usize| -> Result<bool, GraphError> {
        let byte = body[idx / 6];
        if !(63..=126).contains(&byte) {
            return Err(GraphError::MalformedGraph6(format!(
                "byte {byte} outside the printable range 63..=126"
            )));
        }
        let group = byte - 63;
        Ok(group & (1 << (5 - (idx % 6))) != 0)
    };
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bit_of(bit_index)? {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // Padding bits must be zero for a bit-exact encoding.
    for idx in bit_index..nbytes * 6 {
        if bit_of(idx)? {
            return Err(bad("nonzero padding bits".to_string()));
        }
    }
    for (u, v) in edges {
        g = with_edge(g, u, v);
    }
    Ok(g)
}

fn with_edge(g: LoopWeightedGraph, u: Vertex, v: Vertex) -> LoopWeightedGraph {
    // Reconstruction helper: endpoints are already validated against n.
    LoopWeightedGraph::from_parts(
        g.n(),
        g.edges().chain(std::iter::once((u, v))),
        g.loops().iter().map(|(v, w)| (*v, w.clone())),
    )
    .expect("edge endpoints in range by construction")
}

/// DOT export of an undirected graph; loop weights appear as a `loop=`
/// attribute on the vertex (integers unquoted, other rationals quoted).
pub fn write_dot(g: &LoopWeightedGraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let mut attrs = Vec::new();
        if let Some(labels) = labels {
            if let Some(label) = labels.get(v) {
                attrs.push(format!("label=\"{}\"", label.replace('"', "\\\"")));
            }
        }
        let w = g.loop_weight(v);
        if !num::Zero::is_zero(&w) {
            let text = ratio::format_compact(&w);
            if text.contains('/') {
                attrs.push(format!("loop=\"{text}\""));
            } else {
                attrs.push(format!("loop={text}"));
            }
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {v};\n"));
        } else {
            out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct EdgeListJson {
    n: usize,
    #[serde(default)]
    edges: Vec<(Vertex, Vertex)>,
    #[serde(default)]
    loops: BTreeMap<String, String>,
}

/// Edge-list JSON: `{"n": .., "edges": [[u,v],..], "loops": {"v": "p/q"}}`.
pub fn write_edge_list_json(g: &LoopWeightedGraph) -> String {
    let doc = EdgeListJson {
        n: g.n(),
        edges: g.edges().collect(),
        loops: g
            .loops()
            .iter()
            .map(|(v, w)| (v.to_string(), ratio::format_pq(w)))
            .collect(),
    };
    serde_json::to_string(&doc).expect("edge list serialization cannot fail")
}

pub fn parse_edge_list_json(text: &str) -> Result<LoopWeightedGraph, GraphError> {
    let doc: EdgeListJson = serde_json::from_str(text)
        .map_err(|e| GraphError::MalformedEdgeList(e.to_string()))?;
    let mut loops = Vec::new();
    for (k, v) in &doc.loops {
        let vertex: Vertex = k
            .parse()
            .map_err(|_| GraphError::MalformedEdgeList(format!("bad loop vertex {k:?}")))?;
        let weight = ratio::parse(v).map_err(GraphError::MalformedEdgeList)?;
        loops.push((vertex, weight));
    }
    LoopWeightedGraph::from_parts(doc.n, doc.edges, loops)
}
