//! JSON serialization of curve systems and DOT export of crossing graphs.
//!
//! All ids are strings. Darts in vertex rotations are written `name+` (tail
//! end) and `name-` (head end); curve cycles use the same tokens for forward
//! and backward traversal. Region boundary walks are arrays of edge sides,
//! `name:R` for the right side of the oriented edge and `name:L` for the
//! left; a walk array may be partial, only its first entry anchors the walk.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::system::{
    Curve, CurveSystem, Dart, Dir, Edge, End, SideDart, SystemBuilder, SystemError, Vertex,
};

#[derive(Error, Debug)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown {kind} id {id:?}")]
    UnknownId { kind: &'static str, id: String },
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("bad token {0:?}, expected a suffix {1}")]
    BadToken(String, &'static str),
    #[error(transparent)]
    System(#[from] SystemError),
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: String,
    /// Counterclockwise rotation of incident darts.
    darts: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    id: String,
    curve: String,
    from: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct CurveDoc {
    id: String,
    edges: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RegionDoc {
    id: String,
    #[serde(default)]
    genus: usize,
    walks: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SystemDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
    curves: Vec<CurveDoc>,
    regions: Vec<RegionDoc>,
}

fn split_suffix<'a>(tok: &'a str, a: &str, b: &str) -> Option<(&'a str, bool)> {
    if let Some(base) = tok.strip_suffix(a) {
        Some((base, true))
    } else {
        tok.strip_suffix(b).map(|base| (base, false))
    }
}

pub fn from_json(text: &str) -> Result<CurveSystem, IoError> {
    let doc: SystemDoc = serde_json::from_str(text)?;

    let index = |kind: &'static str, ids: Vec<&String>| -> Result<HashMap<String, usize>, IoError> {
        let mut m = HashMap::new();
        for (i, id) in ids.into_iter().enumerate() {
            if m.insert(id.clone(), i).is_some() {
                return Err(IoError::DuplicateId { kind, id: id.clone() });
            }
        }
        Ok(m)
    };
    let v_ix = index("vertex", doc.vertices.iter().map(|v| &v.id).collect())?;
    let e_ix = index("edge", doc.edges.iter().map(|e| &e.id).collect())?;
    let c_ix = index("curve", doc.curves.iter().map(|c| &c.id).collect())?;

    let edge_of = |id: &str| -> Result<usize, IoError> {
        e_ix.get(id).copied().ok_or_else(|| IoError::UnknownId {
            kind: "edge",
            id: id.to_string(),
        })
    };

    let dart_tok = |tok: &str| -> Result<Dart, IoError> {
        let (base, plus) = split_suffix(tok, "+", "-")
            .ok_or_else(|| IoError::BadToken(tok.to_string(), "+ or -"))?;
        Ok(Dart {
            edge: edge_of(base)?,
            end: if plus { End::Tail } else { End::Head },
        })
    };
    let side_tok = |tok: &str| -> Result<SideDart, IoError> {
        let (base, right) = split_suffix(tok, ":R", ":L")
            .ok_or_else(|| IoError::BadToken(tok.to_string(), ":R or :L"))?;
        Ok(SideDart {
            edge: edge_of(base)?,
            dir: if right { Dir::Forward } else { Dir::Backward },
        })
    };

    let mut b = SystemBuilder::default();
    for v in &doc.vertices {
        b.vertices.push(Vertex {
            name: v.id.clone(),
            darts: v.darts.iter().map(|t| dart_tok(t)).collect::<Result<_, _>>()?,
        });
    }
    for e in &doc.edges {
        let look = |kind: &'static str, m: &HashMap<String, usize>, id: &str| {
            m.get(id).copied().ok_or_else(|| IoError::UnknownId {
                kind,
                id: id.to_string(),
            })
        };
        b.edges.push(Edge {
            name: e.id.clone(),
            curve: look("curve", &c_ix, &e.curve)?,
            from: look("vertex", &v_ix, &e.from)?,
            to: look("vertex", &v_ix, &e.to)?,
        });
    }
    for c in &doc.curves {
        let mut edges = Vec::new();
        for t in &c.edges {
            let (base, plus) = split_suffix(t, "+", "-")
                .ok_or_else(|| IoError::BadToken(t.clone(), "+ or -"))?;
            edges.push((
                edge_of(base)?,
                if plus { Dir::Forward } else { Dir::Backward },
            ));
        }
        b.curves.push(Curve {
            name: c.id.clone(),
            edges,
        });
    }
    for r in &doc.regions {
        let mut anchors = Vec::new();
        for w in &r.walks {
            let first = w.first().ok_or_else(|| {
                IoError::BadToken("[]".into(), "a non-empty walk array")
            })?;
            anchors.push(side_tok(first)?);
        }
        b.regions.push((r.id.clone(), r.genus, anchors));
    }
    Ok(b.build()?)
}

pub fn to_json(sys: &CurveSystem) -> String {
    let dart_tok = |d: Dart| -> String {
        let sign = match d.end {
            End::Tail => "+",
            End::Head => "-",
        };
        format!("{}{sign}", sys.edges[d.edge].name)
    };
    let side_tok = |s: SideDart| -> String {
        let side = match s.dir {
            Dir::Forward => ":R",
            Dir::Backward => ":L",
        };
        format!("{}{side}", sys.edges[s.edge].name)
    };
    let doc = SystemDoc {
        vertices: sys
            .vertices
            .iter()
            .map(|v| VertexDoc {
                id: v.name.clone(),
                darts: v.darts.iter().map(|&d| dart_tok(d)).collect(),
            })
            .collect(),
        edges: sys
            .edges
            .iter()
            .map(|e| EdgeDoc {
                id: e.name.clone(),
                curve: sys.curves[e.curve].name.clone(),
                from: sys.vertices[e.from].name.clone(),
                to: sys.vertices[e.to].name.clone(),
            })
            .collect(),
        curves: sys
            .curves
            .iter()
            .map(|c| CurveDoc {
                id: c.name.clone(),
                edges: c
                    .edges
                    .iter()
                    .map(|&(e, d)| {
                        let sign = match d {
                            Dir::Forward => "+",
                            Dir::Backward => "-",
                        };
                        format!("{}{sign}", sys.edges[e].name)
                    })
                    .collect(),
            })
            .collect(),
        regions: sys
            .regions
            .iter()
            .map(|r| RegionDoc {
                id: r.name.clone(),
                genus: r.genus,
                walks: r
                    .walks
                    .iter()
                    .map(|&w| sys.walks[w].0.iter().map(|&s| side_tok(s)).collect())
                    .collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// DOT rendering of the crossing graph, one color per curve.
pub fn to_dot(sys: &CurveSystem) -> String {
    const PALETTE: [&str; 8] = [
        "crimson", "royalblue", "forestgreen", "darkorange", "purple", "teal", "goldenrod",
        "dimgray",
    ];
    let mut out = String::from("graph curve_system {\n");
    out.push_str("  layout=neato;\n  node [shape=point];\n");
    for v in &sys.vertices {
        out.push_str(&format!("  \"{}\";\n", v.name));
    }
    for e in &sys.edges {
        let color = PALETTE[e.curve % PALETTE.len()];
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\", color={}, fontcolor={}];\n",
            sys.vertices[e.from].name, sys.vertices[e.to].name, e.name, color, color
        ));
    }
    out.push_str("}\n");
    out
}
