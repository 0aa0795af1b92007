//! Reading and writing hypergraphs.
//!
//! JSON: `{"vertices": [..], "edges": [{"id", "vertices", "weight"?}]}` with
//! weights as rational strings such as `"3/2"`. Lines: one edge per line as
//! whitespace-separated vertex names; ids `e1, e2, ..` in file order,
//! vertices in order of first appearance, no weights. Blank lines and lines
//! starting with `#` are skipped.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use hypermod_core::{parse_rational, EdgeSpec, Error, Hypergraph, Rational};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Lines,
}

impl Format {
    /// `.json` files are JSON, everything else is the line format.
    pub fn guess(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Lines,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonHypergraph {
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    id: String,
    vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<NumberText>,
}

/// Rationals are written as strings; plain JSON numbers are accepted on
/// input.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum NumberText {
    Text(String),
    Number(serde_json::Number),
}

impl NumberText {
    fn parse(&self) -> hypermod_core::Result<Rational> {
        match self {
            NumberText::Text(s) => parse_rational(s),
            NumberText::Number(n) => parse_rational(&n.to_string()),
        }
    }
}

fn invalid(msg: String) -> CliError {
    CliError::Core(Error::Validation(msg))
}

pub fn parse(text: &str, format: Format) -> CliResult<Hypergraph> {
    match format {
        Format::Json => parse_json(text),
        Format::Lines => parse_lines(text),
    }
}

pub fn parse_json(text: &str) -> CliResult<Hypergraph> {
    let raw: JsonHypergraph =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad JSON: {e}")))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        let weight = match &e.weight {
            Some(w) => Some(
                w.parse()
                    .map_err(|err| invalid(format!("edge {}: {err}", e.id)))?,
            ),
            None => None,
        };
        edges.push(EdgeSpec {
            id: e.id,
            vertices: e.vertices,
            weight,
        });
    }
    Ok(Hypergraph::new(raw.vertices, edges)?)
}

pub fn parse_lines(text: &str) -> CliResult<Hypergraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let names: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        for v in &names {
            if !vertices.contains(v) {
                vertices.push(v.clone());
            }
        }
        edges.push(EdgeSpec {
            id: format!("e{}", edges.len() + 1),
            vertices: names,
            weight: None,
        });
    }
    Ok(Hypergraph::new(vertices, edges)?)
}

pub fn to_json(h: &Hypergraph) -> String {
    let raw = JsonHypergraph {
        vertices: h.vertices().to_vec(),
        edges: h
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| JsonEdge {
                id: e.id.clone(),
                vertices: h.edge_vertex_names(i).into_iter().map(str::to_string).collect(),
                weight: e.weight.as_ref().map(|w| NumberText::Text(w.to_string())),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}

/// Fails when the line format cannot carry `h`: weights, isolated vertices,
/// ids other than `e1, e2, ..` or a vertex order other than first
/// appearance.
pub fn to_lines(h: &Hypergraph) -> CliResult<String> {
    let mut out = String::new();
    let mut seen: Vec<&str> = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.weight.is_some() {
            return Err(CliError::Input("the line format has no weights".into()));
        }
        if e.id != format!("e{}", i + 1) {
            return Err(CliError::Input(format!(
                "edge id {} cannot be written in the line format",
                e.id
            )));
        }
        let names = h.edge_vertex_names(i);
        for v in &names {
            if !seen.contains(v) {
                seen.push(v);
            }
        }
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    if seen != h.vertices().iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(CliError::Input(
            "the line format needs every vertex on an edge, listed in order of first appearance"
                .into(),
        ));
    }
    Ok(out)
}

pub fn load(path: &Path, format: Option<Format>) -> CliResult<Hypergraph> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text, format.unwrap_or_else(|| Format::guess(path)))
}

/// A JSON object from edge id to rational string (or number). Edges not
/// named keep their own weight, or 1.
pub fn parse_weights(text: &str, h: &Hypergraph) -> CliResult<Vec<Rational>> {
    let raw: BTreeMap<String, NumberText> = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("bad weights JSON: {e}")))?;
    let mut w = h.weights();
    for (id, value) in raw {
        let Some(i) = h.edge_index(&id) else {
            return Err(invalid(format!("weights name unknown edge {id:?}")));
        };
        let q = value.parse().map_err(|e| invalid(format!("edge {id}: {e}")))?;
        if q <= Rational::from_integer(0.into()) {
            return Err(invalid(format!("edge {id}: weight {q} is not positive")));
        }
        w[i] = q;
    }
    Ok(w)
}

pub fn load_weights(path: &Path, h: &Hypergraph) -> CliResult<Vec<Rational>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_weights(&text, h)
}
