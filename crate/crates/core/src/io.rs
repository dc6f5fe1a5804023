//! File formats: digraph text, path-complex, simplicial and cell-complex JSON.
//!
//! Digraph text is line oriented:
//!
//! ```text
//! # comment
//! v a
//! v b
//! e a b
//! ```
//!
//! Emitters are canonical, so emitting a parsed file reproduces it byte for
//! byte once it is in canonical order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hochschild::SimplicialComplex;
use crate::model::{Digraph, ElementaryPath, PathComplex, VertexSet};
use crate::realization::{cell_coordinates, Cell, CellComplex, ClosureDiagnostic, DegeneracyRecord, FaceAttachment};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line(), e.column(), e.to_string())
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut vs = VertexSet::new();
    let mut edges = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        match head {
            "v" => {
                if toks.len() != 2 {
                    let c = toks.get(2).map_or(col + 1, |t| t.0);
                    return Err(parse_err(ln, c, "expected `v <label>`"));
                }
                vs.insert(toks[1].1).map_err(|e| parse_err(ln, toks[1].0, e.to_string()))?;
            }
            "e" => {
                if toks.len() != 3 {
                    let c = toks.get(3).map_or(col + 1, |t| t.0);
                    return Err(parse_err(ln, c, "expected `e <from> <to>`"));
                }
                let lookup = |(c, l): (usize, &str)| vs.id(l).ok_or_else(|| parse_err(ln, c, format!("undeclared vertex {l:?}")));
                let (u, v) = (lookup(toks[1])?, lookup(toks[2])?);
                edges.push((ln, toks[1].0, u, v));
            }
            other => return Err(parse_err(ln, col, format!("unknown directive {other:?}"))),
        }
    }
    let mut g = Digraph::new(vs);
    for (ln, col, u, v) in edges {
        g.add_edge(u, v).map_err(|e| parse_err(ln, col, e.to_string()))?;
    }
    Ok(g)
}

pub fn emit_digraph(g: &Digraph) -> String {
    let vs = g.vertex_set();
    let mut out = String::new();
    for name in vs.names() {
        out.push_str(&format!("v {name}\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", vs.name(u), vs.name(v)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum PathEntry {
    Vertex(String),
    Path(Vec<String>),
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathComplexFile {
    vertices: Vec<String>,
    #[serde(default = "default_true")]
    regular: bool,
    paths: BTreeMap<String, Vec<PathEntry>>,
}

fn labels_to_ids(vs: &VertexSet, labels: &[String]) -> Result<Vec<usize>> {
    labels.iter().map(|l| vs.id(l).ok_or_else(|| Error::Invalid(format!("unknown vertex {l:?}")))).collect()
}

fn ids_to_labels(vs: &VertexSet, p: &ElementaryPath) -> Vec<String> {
    p.0.iter().map(|&v| vs.name(v).to_string()).collect()
}

/// Parses path-complex JSON and checks the truncation axioms.
pub fn parse_path_complex(text: &str) -> Result<PathComplex> {
    let file: PathComplexFile = serde_json::from_str(text).map_err(json_err)?;
    let vs = VertexSet::from_labels(file.vertices)?;
    let mut pc = PathComplex::new(vs.clone(), file.regular);
    for (key, entries) in file.paths {
        let dim: usize = key.parse().map_err(|_| Error::Invalid(format!("path dimension key {key:?} is not a number")))?;
        for e in entries {
            let labels = match e {
                PathEntry::Vertex(l) => vec![l],
                PathEntry::Path(ls) => ls,
            };
            let p = ElementaryPath(labels_to_ids(&vs, &labels)?);
            if p.0.is_empty() || p.dim() != dim {
                return Err(Error::Invalid(format!("path {labels:?} listed under dimension {dim}")));
            }
            pc.insert(p);
        }
    }
    let report = pc.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(format!("not a path complex: {report}")));
    }
    Ok(pc)
}

pub fn emit_path_complex(pc: &PathComplex) -> String {
    let vs = pc.vertex_set();
    let mut paths = BTreeMap::new();
    for n in 0..=pc.max_dim() {
        let entries: Vec<PathEntry> = pc
            .paths(n)
            .iter()
            .map(|p| if n == 0 { PathEntry::Vertex(vs.name(p.0[0]).to_string()) } else { PathEntry::Path(ids_to_labels(vs, p)) })
            .collect();
        if !entries.is_empty() {
            paths.insert(n.to_string(), entries);
        }
    }
    let file = PathComplexFile { vertices: vs.names().to_vec(), regular: pc.is_regular_flagged(), paths };
    to_pretty(&file)
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SimplicialFile {
    #[serde(default)]
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SimplicialInput {
    Bare(Vec<Vec<String>>),
    Object(SimplicialFile),
}

/// Accepts `{"vertices": [...], "facets": [[...]]}` or a bare facet list.
pub fn parse_simplicial(text: &str) -> Result<SimplicialComplex> {
    let input: SimplicialInput = serde_json::from_str(text).map_err(json_err)?;
    let file = match input {
        SimplicialInput::Bare(facets) => SimplicialFile { vertices: Vec::new(), facets },
        SimplicialInput::Object(f) => f,
    };
    let mut vs = VertexSet::from_labels(file.vertices)?;
    let mut facets = Vec::with_capacity(file.facets.len());
    for f in &file.facets {
        let mut ids = Vec::with_capacity(f.len());
        for l in f {
            ids.push(match vs.id(l) {
                Some(id) => id,
                None => vs.insert(l.as_str())?,
            });
        }
        facets.push(ids);
    }
    SimplicialComplex::from_facets(vs, facets)
}

pub fn emit_simplicial(s: &SimplicialComplex) -> String {
    let vs = s.vertex_set();
    let facets = s.facets().iter().map(|f| f.iter().map(|&v| vs.name(v).to_string()).collect()).collect();
    to_pretty(&SimplicialFile { vertices: vs.names().to_vec(), facets })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FaceFile {
    target: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degeneracy: Option<DegeneracyRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellFile {
    id: usize,
    dim: usize,
    path: Vec<String>,
    admissible: bool,
    faces: Vec<FaceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<[f64; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellComplexFile {
    vertices: Vec<String>,
    counts: Vec<usize>,
    cells: Vec<CellFile>,
    diagnostics: Vec<ClosureDiagnostic>,
}

/// Cell-complex JSON; `coords` adds corner and barycenter hints for cells of
/// dimension at most 3.
pub fn emit_cell_complex(cc: &CellComplex, coords: bool) -> String {
    let vs = &cc.vertex_set;
    let cells = cc
        .cells
        .iter()
        .map(|c| CellFile {
            id: c.id,
            dim: c.dim,
            path: ids_to_labels(vs, &c.path),
            admissible: c.admissible,
            faces: c.faces.iter().map(|f| FaceFile { target: f.target, degeneracy: f.degeneracy.clone() }).collect(),
            coords: if coords { cell_coordinates(c) } else { None },
        })
        .collect();
    to_pretty(&CellComplexFile { vertices: vs.names().to_vec(), counts: cc.counts(), cells, diagnostics: cc.diagnostics.clone() })
}

pub fn parse_cell_complex(text: &str) -> Result<CellComplex> {
    let file: CellComplexFile = serde_json::from_str(text).map_err(json_err)?;
    let vs = VertexSet::from_labels(file.vertices)?;
    let mut cells = Vec::with_capacity(file.cells.len());
    for (i, c) in file.cells.into_iter().enumerate() {
        if c.id != i {
            return Err(Error::Invalid(format!("cell ids must be 0..n in order; found {} at {i}", c.id)));
        }
        let path = ElementaryPath(labels_to_ids(&vs, &c.path)?);
        if path.0.is_empty() || path.dim() != c.dim {
            return Err(Error::Invalid(format!("cell {i} has dimension {} but path {:?}", c.dim, c.path)));
        }
        let faces = c.faces.into_iter().map(|f| FaceAttachment { target: f.target, degeneracy: f.degeneracy }).collect();
        cells.push(Cell { id: c.id, path, dim: c.dim, faces, admissible: c.admissible });
    }
    if let Some(c) = cells.iter().flat_map(|c| &c.faces).find(|f| f.target >= cells.len()) {
        return Err(Error::Invalid(format!("face target {} is not a cell", c.target)));
    }
    let cc = CellComplex::from_parts(vs, cells, file.diagnostics);
    if cc.counts() != file.counts {
        return Err(Error::Invalid(format!("counts {:?} do not match cells {:?}", file.counts, cc.counts())));
    }
    if !cc.is_closed() {
        return Err(Error::Invalid("cell complex is not closed under its face attachments".into()));
    }
    Ok(cc)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    to_pretty(v)
}
