//! JSON documents for graphs and colorings.
//!
//! Serialization is canonical: vertices by id, edges as `u < v` in
//! lexicographic order, pretty-printed with a trailing newline. Parsing a
//! canonical document and writing it back gives the same bytes.

use forestpart_core::{
    CaseStep, CaseTrace, Class, Coloring, GraphError, Normalization, Params, VertexId,
    WeightedMultigraph,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} has class {1}; classes are 1 and 2")]
    BadClass(u32, u8),
    #[error("vertex {0} is assigned twice")]
    DuplicateAssignment(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    pub d1: i64,
    pub d2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: u32,
    pub w1: i64,
    pub w2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub u: u32,
    pub v: u32,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub params: ParamsDoc,
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

impl GraphDocument {
    pub fn from_graph(g: &WeightedMultigraph) -> Self {
        let p = g.params();
        GraphDocument {
            params: ParamsDoc {
                d1: p.d1(),
                d2: p.d2(),
            },
            vertices: g
                .vertices()
                .map(|v| VertexDoc {
                    id: v.0,
                    w1: g.weight(v, Class::One).expect("vertex"),
                    w2: g.weight(v, Class::Two).expect("vertex"),
                })
                .collect(),
            edges: g
                .edges()
                .map(|(u, v, m)| EdgeDoc {
                    u: u.0,
                    v: v.0,
                    multiplicity: m.into(),
                })
                .collect(),
        }
    }

    /// Builds the graph, reporting anything that had to be clamped.
    pub fn to_graph(&self) -> Result<(WeightedMultigraph, Vec<Normalization>), DocumentError> {
        let params = Params::new(self.params.d1, self.params.d2)?;
        let vertices = self.vertices.iter().map(|v| (VertexId(v.id), v.w1, v.w2));
        let edges = self
            .edges
            .iter()
            .map(|e| (VertexId(e.u), VertexId(e.v), e.multiplicity));
        Ok(WeightedMultigraph::from_parts(params, vertices, edges)?)
    }
}

pub fn parse_graph(text: &str) -> Result<(WeightedMultigraph, Vec<Normalization>), DocumentError> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

pub fn render_graph(g: &WeightedMultigraph) -> String {
    pretty(&GraphDocument::from_graph(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentDoc {
    pub id: u32,
    pub class: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDoc {
    pub case: u8,
    pub note: String,
    pub vertices: Vec<u32>,
    pub recursion_size: usize,
    pub depth: usize,
    pub parent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flipped: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bridge: Option<[u32; 2]>,
}

impl From<&CaseStep> for StepDoc {
    fn from(s: &CaseStep) -> Self {
        StepDoc {
            case: s.case,
            note: s.note.clone(),
            vertices: s.vertices.iter().map(|v| v.0).collect(),
            recursion_size: s.recursion_size,
            depth: s.depth,
            parent: s.parent,
            flipped: s.flipped.map(|v| v.0),
            bridge: s.bridge.map(|(z, x)| [z.0, x.0]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub assignments: Vec<AssignmentDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<StepDoc>,
}

impl ColoringDocument {
    pub fn new(c: &Coloring, trace: Option<&CaseTrace>) -> Self {
        ColoringDocument {
            assignments: c
                .iter()
                .map(|(v, k)| AssignmentDoc {
                    id: v.0,
                    class: k.number(),
                })
                .collect(),
            trace: trace
                .map(|t| t.steps.iter().map(StepDoc::from).collect())
                .unwrap_or_default(),
        }
    }

    pub fn to_coloring(&self) -> Result<Coloring, DocumentError> {
        let mut c = Coloring::new();
        for a in &self.assignments {
            let class = Class::from_number(a.class).ok_or(DocumentError::BadClass(a.id, a.class))?;
            if c.assign(VertexId(a.id), class).is_some() {
                return Err(DocumentError::DuplicateAssignment(a.id));
            }
        }
        Ok(c)
    }
}

pub fn parse_coloring(text: &str) -> Result<Coloring, DocumentError> {
    serde_json::from_str::<ColoringDocument>(text)?.to_coloring()
}

pub fn render_coloring(c: &Coloring, trace: Option<&CaseTrace>) -> String {
    pretty(&ColoringDocument::new(c, trace))
}

pub(crate) fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = r#"{
  "params": {
    "d1": 0,
    "d2": 2
  },
  "vertices": [
    {
      "id": 0,
      "w1": 0,
      "w2": 0
    },
    {
      "id": 1,
      "w1": 0,
      "w2": 1
    },
    {
      "id": 2,
      "w1": 0,
      "w2": 0
    }
  ],
  "edges": [
    {
      "u": 0,
      "v": 1,
      "multiplicity": 1
    },
    {
      "u": 1,
      "v": 2,
      "multiplicity": 2
    }
  ]
}
"#;

    #[test]
    fn canonical_text_round_trips() {
        let (g, notes) = parse_graph(P3).unwrap();
        assert!(notes.is_empty());
        assert_eq!(g.multiplicity(VertexId(1), VertexId(2)), 2);
        assert_eq!(render_graph(&g), P3);
    }

    #[test]
    fn minimal_document() {
        let (g, _) = parse_graph(r#"{"params":{"d1":0,"d2":2},"vertices":[{"id":7,"w1":0,"w2":0}]}"#)
            .unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.contains(VertexId(7)));
    }

    #[test]
    fn clamps_are_reported() {
        let text = r#"{"params":{"d1":0,"d2":2},
            "vertices":[{"id":0,"w1":5,"w2":0},{"id":1,"w1":0,"w2":0}],
            "edges":[{"u":1,"v":0,"multiplicity":3}]}"#;
        let (g, notes) = parse_graph(text).unwrap();
        assert_eq!(notes.len(), 2);
        assert_eq!(g.multiplicity(VertexId(0), VertexId(1)), 2);
        assert_eq!(g.weight(VertexId(0), Class::One), Some(1));
    }

    #[test]
    fn bad_documents_are_rejected() {
        let loop_edge = r#"{"params":{"d1":0,"d2":2},"vertices":[{"id":0,"w1":0,"w2":0}],
            "edges":[{"u":0,"v":0,"multiplicity":1}]}"#;
        assert!(matches!(parse_graph(loop_edge), Err(DocumentError::Graph(GraphError::Loop(_)))));
        let dup = r#"{"params":{"d1":0,"d2":2},"vertices":[{"id":0,"w1":0,"w2":0},{"id":0,"w1":0,"w2":0}]}"#;
        assert!(matches!(parse_graph(dup), Err(DocumentError::Graph(GraphError::DuplicateVertex(_)))));
        assert!(matches!(parse_graph("{"), Err(DocumentError::Json(_))));
        assert!(parse_graph(r#"{"params":{"d1":0,"d2":2},"vertices":[],"extra":1}"#).is_err());
        assert!(parse_coloring(r#"{"assignments":[{"id":0,"class":3}]}"#).is_err());
    }

    #[test]
    fn coloring_round_trip() {
        let mut c = Coloring::new();
        c.assign(VertexId(0), Class::One);
        c.assign(VertexId(4), Class::Two);
        assert_eq!(parse_coloring(&render_coloring(&c, None)).unwrap(), c);
    }
}
