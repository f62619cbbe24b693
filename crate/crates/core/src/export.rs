//! Deterministic graph serialization: the JSON [`GraphDocument`] (format
//! version "1") and Graphviz DOT.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Annotation, Diameter, Graph, GraphKind};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub label: String,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: GraphKind,
    /// Ascending part sizes when the graph is complete multipartite.
    pub part_sizes: Option<Vec<usize>>,
    /// `None` when the graph exceeds the coloring cap.
    pub chromatic_number: Option<usize>,
    /// `None` for a disconnected or empty graph.
    pub diameter: Option<usize>,
}

impl Classification {
    pub fn of(graph: &Graph, coloring_cap: usize) -> Self {
        let parts = graph.complete_multipartite_parts();
        Self {
            kind: parts.as_ref().map_or(GraphKind::Other, |p| p.kind),
            part_sizes: parts.map(|p| p.part_sizes),
            chromatic_number: graph.chromatic_number(coloring_cap).ok(),
            diameter: match graph.diameter() {
                Ok(Diameter::Finite(d)) => Some(d),
                _ => None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: String,
    pub group_spec: Option<String>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
}

impl GraphDocument {
    /// Unannotated vertices are labelled by id with order 0.
    pub fn from_graph(graph: &Graph, group_spec: Option<&str>) -> Self {
        let vertices = (0..graph.vertex_count())
            .map(|id| match graph.annotations() {
                Some(ann) => VertexRecord { id, label: ann[id].label.clone(), order: ann[id].order_tag },
                None => VertexRecord { id, label: id.to_string(), order: 0 },
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION.to_string(),
            group_spec: group_spec.map(str::to_string),
            vertices,
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
            classification: None,
        }
    }

    pub fn with_classification(mut self, classification: Classification) -> Self {
        self.classification = Some(classification);
        self
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    /// Rebuilds the annotated graph, checking ids, edge order and ranges.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Document(format!("unsupported format_version {:?}", self.format_version)));
        }
        let n = self.vertices.len();
        if let Some((i, v)) = self.vertices.iter().enumerate().find(|(i, v)| v.id != *i) {
            return Err(Error::Document(format!("vertex at position {i} has id {}", v.id)));
        }
        for pair in self.edges.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Document(format!("edges not strictly sorted at {:?}", pair[1])));
            }
        }
        if let Some(e) = self.edges.iter().find(|[u, v]| u >= v) {
            return Err(Error::Document(format!("edge {e:?} is not written as [i, j] with i < j")));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let annotations = self.vertices.iter().map(|v| Annotation::new(v.label.clone(), v.order)).collect();
        Graph::from_edges(n, &edges)?.with_annotations(annotations)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT with same-tag vertices grouped into one cluster per tag.
pub fn to_dot(graph: &Graph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", escape(title)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    match graph.annotations() {
        Some(ann) => {
            let mut clusters: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            for (v, a) in ann.iter().enumerate() {
                clusters.entry(a.order_tag).or_default().push(v);
            }
            for (tag, members) in clusters {
                writeln!(out, "  subgraph cluster_o{tag} {{").unwrap();
                writeln!(out, "    label=\"o={tag}\";").unwrap();
                writeln!(out, "    rank=same;").unwrap();
                for v in members {
                    let label = format!("{} (o={})", ann[v].label, ann[v].order_tag);
                    writeln!(out, "    {v} [label=\"{}\"];", escape(&label)).unwrap();
                }
                writeln!(out, "  }}").unwrap();
            }
        }
        None => {
            for v in 0..graph.vertex_count() {
                writeln!(out, "  {v};").unwrap();
            }
        }
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
