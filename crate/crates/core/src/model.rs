//! Vertices, elementary paths, path complexes and digraphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interned vertex labels; ids are dense and follow insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vs = VertexSet::new();
        for l in labels {
            vs.insert(l)?;
        }
        Ok(vs)
    }

    /// Labels `0..n`.
    pub fn numbered(n: usize) -> Self {
        Self::from_labels((0..n).map(|i| i.to_string())).expect("numbered labels are distinct")
    }

    pub fn insert(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::Invalid(format!("bad vertex label {label:?}")));
        }
        if self.index.contains_key(&label) {
            return Err(Error::Invalid(format!("duplicate vertex label {label:?}")));
        }
        let id = self.names.len();
        self.index.insert(label.clone(), id);
        self.names.push(label);
        Ok(id)
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Renders a path: labels concatenated when all are single characters,
    /// otherwise joined with `-`.
    pub fn render(&self, path: &ElementaryPath) -> String {
        let single = path.0.iter().all(|&v| self.names[v].chars().count() == 1);
        let parts: Vec<&str> = path.0.iter().map(|&v| self.names[v].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join("-")
        }
    }
}

/// An ordered vertex sequence; a `p`-path has `p + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementaryPath(pub Vec<usize>);

impl ElementaryPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "elementary path needs at least one vertex");
        ElementaryPath(vertices)
    }

    pub fn vertex(v: usize) -> Self {
        ElementaryPath(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// The path with entry `q` removed.
    pub fn omit(&self, q: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(q);
        ElementaryPath(v)
    }

    pub fn drop_first(&self) -> Self {
        ElementaryPath(self.0[1..].to_vec())
    }

    pub fn drop_last(&self) -> Self {
        ElementaryPath(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn concat(&self, other: &Self) -> Self {
        ElementaryPath(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for ElementaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(if self.0.iter().all(|&v| v < 10) { "" } else { "-" }))
    }
}

/// The alternating face list `[((-1)^q, p with entry q omitted)]`, including
/// non-regular faces.
pub fn boundary_faces(p: &ElementaryPath) -> Vec<(i8, ElementaryPath)> {
    assert!(p.dim() >= 1, "boundary_faces needs dim >= 1");
    (0..=p.dim()).map(|q| (if q % 2 == 0 { 1 } else { -1 }, p.omit(q))).collect()
}

/// Paths per dimension, each dimension in lexicographic id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathComplex {
    vertex_set: VertexSet,
    paths: Vec<BTreeSet<ElementaryPath>>,
    regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    MissingTruncation { path: String, missing: String, dim: usize },
    NonRegular { path: String },
    UnknownVertex { path: String },
    WrongDimension { path: String, dim: usize },
    NoVertices,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingTruncation { path, missing, dim } => write!(f, "{path} requires {missing} at dim {dim}"),
            Violation::NonRegular { path } => write!(f, "{path} is not regular"),
            Violation::UnknownVertex { path } => write!(f, "{path} uses an unknown vertex"),
            Violation::WrongDimension { path, dim } => write!(f, "{path} stored at dim {dim}"),
            Violation::NoVertices => f.write_str("no 0-paths"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let msgs: Vec<String> = self.violations.iter().map(Violation::to_string).collect();
        f.write_str(&msgs.join("; "))
    }
}

impl PathComplex {
    pub fn new(vertex_set: VertexSet, regular: bool) -> Self {
        PathComplex { vertex_set, paths: vec![BTreeSet::new()], regular }
    }

    /// Inserts a path as given; no closure is applied.
    pub fn insert(&mut self, path: ElementaryPath) {
        let d = path.dim();
        if self.paths.len() <= d {
            self.paths.resize_with(d + 1, BTreeSet::new);
        }
        self.paths[d].insert(path);
    }

    /// Builds from an explicit path list.
    pub fn from_paths(vertex_set: VertexSet, regular: bool, paths: impl IntoIterator<Item = ElementaryPath>) -> Self {
        let mut pc = PathComplex::new(vertex_set, regular);
        for p in paths {
            pc.insert(p);
        }
        pc.trim();
        pc
    }

    /// Adds every left and right truncation, recursively.
    pub fn close_under_truncation(&mut self) {
        for d in (1..self.paths.len()).rev() {
            let extra: Vec<ElementaryPath> = self.paths[d].iter().flat_map(|p| [p.drop_first(), p.drop_last()]).collect();
            self.paths[d - 1].extend(extra);
        }
    }

    fn trim(&mut self) {
        while self.paths.len() > 1 && self.paths.last().is_some_and(BTreeSet::is_empty) {
            self.paths.pop();
        }
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertex_set
    }

    pub fn is_regular_flagged(&self) -> bool {
        self.regular
    }

    /// Paths of dimension `n` (empty beyond the stored range).
    pub fn paths(&self, n: usize) -> &BTreeSet<ElementaryPath> {
        static EMPTY: BTreeSet<ElementaryPath> = BTreeSet::new();
        self.paths.get(n).unwrap_or(&EMPTY)
    }

    pub fn contains(&self, p: &ElementaryPath) -> bool {
        self.paths(p.dim()).contains(p)
    }

    /// Highest dimension with a stored path.
    pub fn max_dim(&self) -> usize {
        self.paths.iter().rposition(|s| !s.is_empty()).unwrap_or(0)
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.max_dim()).map(|n| self.paths(n).len()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementaryPath> {
        self.paths.iter().flatten()
    }

    pub fn render(&self, p: &ElementaryPath) -> String {
        self.vertex_set.render(p)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.paths(0).is_empty() {
            violations.push(Violation::NoVertices);
        }
        let nv = self.vertex_set.len();
        for (d, set) in self.paths.iter().enumerate() {
            for p in set {
                let shown = if p.0.iter().all(|&v| v < nv) { self.render(p) } else { p.to_string() };
                if p.dim() != d {
                    violations.push(Violation::WrongDimension { path: shown.clone(), dim: d });
                }
                if p.0.iter().any(|&v| v >= nv) {
                    violations.push(Violation::UnknownVertex { path: shown });
                    continue;
                }
                if self.regular && !p.is_regular() {
                    violations.push(Violation::NonRegular { path: shown.clone() });
                }
                if d >= 1 {
                    let mut missing = vec![p.drop_last()];
                    let left = p.drop_first();
                    if left != missing[0] {
                        missing.push(left);
                    }
                    for m in missing {
                        if !self.paths(d - 1).contains(&m) {
                            violations.push(Violation::MissingTruncation {
                                path: shown.clone(),
                                missing: self.render(&m),
                                dim: d - 1,
                            });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Gate for every downstream construction: valid and regular.
    pub fn ensure_regular_valid(&self) -> Result<()> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report.to_string()));
        }
        if let Some(p) = self.iter().find(|p| !p.is_regular()) {
            return Err(Error::NotRegular(self.render(p)));
        }
        Ok(())
    }

    /// Relabels vertices through `f`, e.g. to build disjoint copies.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        let vs = VertexSet::from_labels(self.vertex_set.names().iter().map(|n| f(n)))?;
        Ok(PathComplex { vertex_set: vs, paths: self.paths.clone(), regular: self.regular })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertex_set: VertexSet,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_set: VertexSet) -> Self {
        Digraph { vertex_set, edges: BTreeSet::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_set.len();
        if u >= n || v >= n {
            return Err(Error::Invalid(format!("edge ({u}, {v}) references an unknown vertex")));
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at {}", self.vertex_set.name(u))));
        }
        if !self.edges.insert((u, v)) {
            return Err(Error::Invalid(format!("duplicate edge {} -> {}", self.vertex_set.name(u), self.vertex_set.name(v))));
        }
        Ok(())
    }

    pub fn from_edges(vertex_set: VertexSet, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::new(vertex_set);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertex_set
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_set.len()
    }
}

/// Per-dimension path cap applied by [`path_complex_of_digraph`].
pub const DEFAULT_PATH_CAP: usize = 300_000;

/// All directed walks of `n ≤ max_dim` edges.
pub fn path_complex_of_digraph(g: &Digraph, max_dim: usize) -> Result<PathComplex> {
    path_complex_of_digraph_capped(g, max_dim, DEFAULT_PATH_CAP)
}

pub fn path_complex_of_digraph_capped(g: &Digraph, max_dim: usize, cap: usize) -> Result<PathComplex> {
    let n = g.num_vertices();
    let mut out = vec![Vec::new(); n];
    for &(u, v) in &g.edges {
        out[u].push(v);
    }
    let mut pc = PathComplex::new(g.vertex_set.clone(), true);
    let mut layer: Vec<ElementaryPath> = (0..n).map(ElementaryPath::vertex).collect();
    for d in 0..=max_dim {
        if layer.is_empty() {
            break;
        }
        if layer.len() > cap {
            return Err(Error::BudgetExceeded {
                what: format!("{d}-paths of the digraph"),
                required: layer.len() as u128,
                budget: cap as u128,
            });
        }
        let next: Vec<ElementaryPath> = if d < max_dim {
            layer
                .iter()
                .flat_map(|p| {
                    let last = *p.0.last().unwrap();
                    out[last].iter().map(move |&w| {
                        let mut v = p.0.clone();
                        v.push(w);
                        ElementaryPath(v)
                    })
                })
                .collect()
        } else {
            Vec::new()
        };
        for p in layer {
            pc.insert(p);
        }
        layer = next;
    }
    pc.trim();
    Ok(pc)
}
