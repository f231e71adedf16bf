//! JSON documents and Graphviz export.
//!
//! Document layout:
//!
//! ```json
//! {"vertices":[0,1,2],
//!  "edges":[{"id":0,"u":0,"v":2,"directed":true}],
//!  "pairs":[{"source":0,"sink":1,"demand":1}],
//!  "systems":[[[{"edge":0,"forward":true}]]]}
//! ```
//!
//! `systems` is optional: one entry per pair, each a list of paths, each a
//! list of edge steps.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::graph::{Edge, EdgeId, Network, Pair, PathSystem, RoutedNetwork, Step, VertexId};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    id: u32,
    u: u32,
    v: u32,
    directed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    vertices: Vec<u32>,
    edges: Vec<RawEdge>,
    pairs: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    systems: Option<Vec<Vec<Vec<Step>>>>,
}

/// A parsed document: the network and, when present, its path systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub network: Network,
    pub systems: Option<Vec<PathSystem>>,
}

impl Document {
    pub fn routed(self) -> Option<RoutedNetwork> {
        let systems = self.systems?;
        Some(RoutedNetwork {
            network: self.network,
            systems,
        })
    }
}

impl From<RoutedNetwork> for Document {
    fn from(r: RoutedNetwork) -> Self {
        Document {
            network: r.network,
            systems: Some(r.systems),
        }
    }
}

impl From<Network> for Document {
    fn from(network: Network) -> Self {
        Document {
            network,
            systems: None,
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut g = Network::new();
    for v in raw.vertices {
        g.insert_vertex(VertexId(v))
            .map_err(|source| ParseError::Invariant {
                field: "vertices",
                source,
            })?;
    }
    for p in &raw.pairs {
        g.add_pair(p.source, p.sink, p.demand);
    }
    for e in raw.edges {
        g.insert_edge(Edge {
            id: EdgeId(e.id),
            u: VertexId(e.u),
            v: VertexId(e.v),
            directed: e.directed,
        })
        .map_err(|source| ParseError::Invariant {
            field: "edges",
            source,
        })?;
    }
    g.validate().map_err(|source| ParseError::Invariant {
        field: "pairs",
        source,
    })?;
    let systems = match raw.systems {
        None => None,
        Some(list) => {
            if list.len() != g.pairs().len() {
                return Err(ParseError::Invariant {
                    field: "systems",
                    source: crate::error::GraphError::SystemCount {
                        expected: g.pairs().len(),
                        got: list.len(),
                    },
                });
            }
            let systems = list
                .into_iter()
                .enumerate()
                .map(|(i, paths)| PathSystem::from_steps(&g, i, paths))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| ParseError::Invariant {
                    field: "systems",
                    source,
                })?;
            Some(systems)
        }
    };
    Ok(Document {
        network: g,
        systems,
    })
}

pub fn parse_network(text: &str) -> Result<Network, ParseError> {
    parse_document(text).map(|d| d.network)
}

/// Canonical text: keys in schema order, vertices and edges ascending, one
/// trailing newline.
pub fn serialize_document(doc: &Document) -> String {
    let g = &doc.network;
    let raw = RawDocument {
        vertices: g.vertices().map(|v| v.0).collect(),
        edges: g
            .edges()
            .map(|e| RawEdge {
                id: e.id.0,
                u: e.u.0,
                v: e.v.0,
                directed: e.directed,
            })
            .collect(),
        pairs: g.pairs().to_vec(),
        systems: doc
            .systems
            .as_ref()
            .map(|s| s.iter().map(PathSystem::to_steps).collect()),
    };
    let mut out = serde_json::to_string(&raw).expect("documents always serialize");
    out.push('\n');
    out
}

pub fn serialize_network(g: &Network) -> String {
    serialize_document(&Document {
        network: g.clone(),
        systems: None,
    })
}

pub fn serialize_routed(r: &RoutedNetwork) -> String {
    serialize_document(&Document {
        network: r.network.clone(),
        systems: Some(r.systems.clone()),
    })
}

/// Graphviz rendering. With systems: edges on two or more systems are bold,
/// edges owned by the first system solid, by the second dashed, by any
/// later one dotted. Terminals are boxes.
pub fn export_dot(g: &Network, systems: Option<&[PathSystem]>) -> String {
    let mut out = String::from("digraph network {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let label = match g.terminal(v) {
            Some(crate::graph::Terminal::Source(i)) => format!("S{}", i + 1),
            Some(crate::graph::Terminal::Sink(i)) => format!("R{}", i + 1),
            None => v.0.to_string(),
        };
        let shape = if g.is_terminal(v) { ", shape=box" } else { "" };
        let _ = writeln!(out, "  {} [label=\"{}\"{}];", v.0, label, shape);
    }
    for e in g.edges() {
        let mut attrs = vec![format!("label=\"e{}\"", e.id.0)];
        let mut tail_head = (e.u, e.v);
        if let Some(systems) = systems {
            let owners: Vec<usize> = systems
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains_edge(e.id))
                .map(|(i, _)| i)
                .collect();
            let style = match owners.as_slice() {
                [] => "style=invis",
                [0] => "style=solid",
                [1] => "style=dashed",
                [_] => "style=dotted",
                _ => "style=bold",
            };
            attrs.push(style.to_string());
            if let Some(&first) = owners.first() {
                if let Some(o) = systems[first].oriented(g, e.id) {
                    tail_head = o;
                }
            }
        }
        if !e.directed && systems.is_none() {
            attrs.push("dir=none".into());
        }
        let _ = writeln!(
            out,
            "  {} -> {} [{}];",
            tail_head.0 .0,
            tail_head.1 .0,
            attrs.join(", ")
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{"vertices":[0,1,2],"edges":[{"id":0,"u":0,"v":2,"directed":true},{"id":1,"u":2,"v":1,"directed":true}],"pairs":[{"source":0,"sink":1,"demand":1}]}"#;

    #[test]
    fn canonical_round_trip() {
        let g = parse_network(SMALL).unwrap();
        let text = serialize_network(&g);
        assert_eq!(text.trim_end(), SMALL);
        assert_eq!(parse_network(&text).unwrap(), g);
    }

    #[test]
    fn reordered_input_canonicalizes() {
        let messy = r#"{"pairs":[{"demand":1,"sink":1,"source":0}],"vertices":[2,0,1],
            "edges":[{"id":1,"u":2,"v":1,"directed":true},{"u":0,"v":2,"directed":true,"id":0}]}"#;
        let g = parse_network(messy).unwrap();
        assert_eq!(serialize_network(&g).trim_end(), SMALL);
    }

    #[test]
    fn source_incoming_edge_is_named() {
        let bad = r#"{"vertices":[0,1,2],"edges":[{"id":0,"u":2,"v":0,"directed":true},{"id":1,"u":2,"v":1,"directed":true}],"pairs":[{"source":0,"sink":1,"demand":1}]}"#;
        let err = parse_network(bad).unwrap_err();
        assert_eq!(err.invariant(), Some("source-incoming-edge"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_network("{\n  \"vertices\": [0,\n}").unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_field_is_a_syntax_error() {
        let err = parse_network(r#"{"vertices":[],"edges":[]}"#).unwrap_err();
        assert!(err.to_string().contains("pairs"));
    }

    #[test]
    fn self_loop_rejected_at_parse() {
        let bad = r#"{"vertices":[0,1,2],"edges":[{"id":0,"u":2,"v":2,"directed":false}],"pairs":[{"source":0,"sink":1,"demand":1}]}"#;
        assert_eq!(parse_network(bad).unwrap_err().invariant(), Some("self-loop"));
    }

    #[test]
    fn systems_round_trip() {
        let with = r#"{"vertices":[0,1,2],"edges":[{"id":0,"u":0,"v":2,"directed":true},{"id":1,"u":2,"v":1,"directed":true}],"pairs":[{"source":0,"sink":1,"demand":1}],"systems":[[[{"edge":0,"forward":true},{"edge":1,"forward":true}]]]}"#;
        let doc = parse_document(with).unwrap();
        assert_eq!(doc.systems.as_ref().unwrap().len(), 1);
        assert_eq!(serialize_document(&doc).trim_end(), with);
    }

    #[test]
    fn dot_marks_terminals() {
        let g = parse_network(SMALL).unwrap();
        let dot = export_dot(&g, None);
        assert!(dot.contains("label=\"S1\", shape=box"));
        assert!(dot.contains("label=\"R1\", shape=box"));
        assert!(dot.contains("0 -> 2"));
    }
}
