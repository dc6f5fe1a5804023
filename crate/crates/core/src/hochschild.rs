//! Simplicial complexes, the cubical digraph, the containment-pair algebra
//! `A_S` and truncated Hochschild (co)homology.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{cohomology_of_complex_with, homology_of_complex_with, ChainComplex, HomologyResult};
use crate::linalg::{rank, Euclidean, Ring, RingSpec, SparseMatrix, SparseVec};
use crate::model::{path_complex_of_digraph, Digraph, VertexSet};
use crate::omega::build_omega;
use crate::par::Execution;
use crate::report::ComparisonReport;

/// Default cap on `dim(A)^{max_deg+1}`.
pub const DEFAULT_HOCHSCHILD_BUDGET: u128 = 300_000;

/// A finite simplicial complex; simplices are sorted vertex-id lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_set: VertexSet,
    simplices: Vec<BTreeSet<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`.
    pub fn from_facets(vertex_set: VertexSet, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut sc = SimplicialComplex { vertex_set, simplices: Vec::new() };
        for mut f in facets {
            f.sort_unstable();
            if f.is_empty() {
                return Err(Error::Invalid("empty facet".into()));
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Invalid(format!("facet {f:?} repeats a vertex")));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= sc.vertex_set.len()) {
                return Err(Error::Invalid(format!("facet uses unknown vertex id {v}")));
            }
            sc.insert_closed(f);
        }
        Ok(sc)
    }

    /// Facets given by label; vertices are numbered in order of appearance.
    pub fn from_labeled_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut vs = VertexSet::new();
        let mut ids = Vec::with_capacity(facets.len());
        for f in facets {
            let mut ids_f = Vec::with_capacity(f.len());
            for l in f {
                let id = match vs.id(l.as_ref()) {
                    Some(id) => id,
                    None => vs.insert(l.as_ref())?,
                };
                ids_f.push(id);
            }
            ids.push(ids_f);
        }
        Self::from_facets(vs, ids)
    }

    fn insert_closed(&mut self, simplex: Vec<usize>) {
        let d = simplex.len() - 1;
        if self.simplices.len() <= d {
            self.simplices.resize_with(d + 1, BTreeSet::new);
        }
        if !self.simplices[d].insert(simplex.clone()) || d == 0 {
            return;
        }
        for i in 0..simplex.len() {
            let mut face = simplex.clone();
            face.remove(i);
            self.insert_closed(face);
        }
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertex_set
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &BTreeSet<Vec<usize>> {
        static EMPTY: BTreeSet<Vec<usize>> = BTreeSet::new();
        self.simplices.get(k).unwrap_or(&EMPTY)
    }

    /// All simplices ordered by dimension, then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.simplices.iter().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(BTreeSet::len).collect()
    }

    /// Maximal simplices.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (k, level) in self.simplices.iter().enumerate() {
            for s in level {
                let covered = self.simplices.get(k + 1).is_some_and(|up| up.iter().any(|t| is_face(s, t)));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Vertex labels joined with `,`.
    pub fn label(&self, simplex: &[usize]) -> String {
        let parts: Vec<&str> = simplex.iter().map(|&v| self.vertex_set.name(v)).collect();
        parts.join(",")
    }

    pub fn is_valid(&self) -> bool {
        self.simplices.iter().flatten().all(|s| {
            s.len() == 1
                || (0..s.len()).all(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    self.simplices(f.len() - 1).contains(&f)
                })
        })
    }

    pub fn components(&self) -> usize {
        let n = self.vertex_set.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            parent[a] = b;
        }
        let used: BTreeSet<usize> = self.simplices(0).iter().map(|v| find(&mut parent, v[0])).collect();
        used.len()
    }

    /// Standard simplicial chain complex, `∂[v_0…v_k] = Σ (−1)^i [… v̂_i …]`.
    pub fn chain_complex<R: Ring>(&self, ring: &R) -> ChainComplex<R::Elem> {
        let index: Vec<BTreeMap<&Vec<usize>, usize>> =
            self.simplices.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        let mut boundaries = Vec::with_capacity(self.simplices.len().max(1));
        boundaries.push(SparseMatrix::zeros(0, self.simplices(0).len()));
        for k in 1..self.simplices.len() {
            let cols = self.simplices[k]
                .iter()
                .map(|s| {
                    let mut col: SparseVec<R::Elem> = (0..s.len())
                        .map(|i| {
                            let mut f = s.clone();
                            f.remove(i);
                            let sign = if i % 2 == 0 { 1 } else { -1 };
                            (index[k - 1][&f], ring.from_i64(sign))
                        })
                        .collect();
                    col.sort_by_key(|e| e.0);
                    col
                })
                .collect();
            boundaries.push(SparseMatrix::from_columns(self.simplices[k - 1].len(), cols));
        }
        ChainComplex { boundaries, complete: true }
    }
}

fn is_face(s: &[usize], t: &[usize]) -> bool {
    s.iter().all(|v| t.binary_search(v).is_ok())
}

/// Small complexes used throughout the tests and the CLI.
pub mod standard {
    use super::SimplicialComplex;

    fn build(facets: &[&[&str]]) -> SimplicialComplex {
        let f: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_labeled_facets(&f).expect("standard complex is valid")
    }

    pub fn point() -> SimplicialComplex {
        build(&[&["a"]])
    }

    pub fn edge() -> SimplicialComplex {
        build(&[&["a", "b"]])
    }

    pub fn triangle_boundary() -> SimplicialComplex {
        build(&[&["a", "b"], &["b", "c"], &["a", "c"]])
    }

    pub fn tetrahedron_boundary() -> SimplicialComplex {
        build(&[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]])
    }

    /// Filled triangle with a pendant edge and an isolated vertex.
    pub fn triangle_with_tail() -> SimplicialComplex {
        build(&[&["a", "b", "c"], &["c", "d"], &["e"]])
    }

    /// The six-vertex triangulation of the real projective plane.
    pub fn rp2() -> SimplicialComplex {
        build(&[
            &["1", "2", "3"],
            &["1", "3", "4"],
            &["1", "4", "5"],
            &["1", "5", "6"],
            &["1", "2", "6"],
            &["2", "3", "5"],
            &["3", "4", "6"],
            &["2", "4", "5"],
            &["3", "5", "6"],
            &["2", "4", "6"],
        ])
    }
}

/// `G_S`: simplices as vertices, `s → t` when `t` is a facet of `s`.
pub fn cubical_digraph(s: &SimplicialComplex) -> Digraph {
    let simplices: Vec<&Vec<usize>> = s.iter().collect();
    let index: BTreeMap<&Vec<usize>, usize> = simplices.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let vs = VertexSet::from_labels(simplices.iter().map(|x| s.label(x))).expect("simplex labels are distinct");
    let mut edges = Vec::new();
    for (i, x) in simplices.iter().enumerate() {
        if x.len() < 2 {
            continue;
        }
        for k in 0..x.len() {
            let mut f = (*x).clone();
            f.remove(k);
            edges.push((i, index[&f]));
        }
    }
    Digraph::from_edges(vs, edges).expect("containment edges are simple")
}

/// Finite-dimensional associative algebra whose basis is closed under
/// multiplication up to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocAlgebra {
    pub basis: Vec<String>,
    /// `table[i][j]` is the basis index of `b_i · b_j`, or `None` for zero.
    pub table: Vec<Vec<Option<usize>>>,
    /// The unit as a sum of basis elements.
    pub unit: Vec<usize>,
}

impl AssocAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }

    /// Triples where `(xy)z ≠ x(yz)`.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        let mut out = Vec::new();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let l = self.mul(x, y).and_then(|xy| self.mul(xy, z));
                    let r = self.mul(y, z).and_then(|yz| self.mul(x, yz));
                    if l != r {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    /// Checks `1·b = b = b·1` for every basis element.
    pub fn unit_holds(&self) -> bool {
        (0..self.dim()).all(|b| {
            let left: Vec<usize> = self.unit.iter().filter_map(|&u| self.mul(u, b)).collect();
            let right: Vec<usize> = self.unit.iter().filter_map(|&u| self.mul(b, u)).collect();
            left == [b] && right == [b]
        })
    }

    /// All `(p, q)` with `p · q = x`, indexed by `x`.
    pub fn factorizations(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.dim()];
        for p in 0..self.dim() {
            for q in 0..self.dim() {
                if let Some(x) = self.mul(p, q) {
                    out[x].push((p, q));
                }
            }
        }
        out
    }
}

/// `A_S`: pairs `(σ, τ)` with `σ ⊇ τ`, `(s_1, t_1)(s_2, t_2) = (s_1, t_2)` when
/// `t_1 = s_2`, unit `Σ (σ, σ)`.
pub fn build_a_s(s: &SimplicialComplex) -> AssocAlgebra {
    let simplices: Vec<&Vec<usize>> = s.iter().collect();
    let mut pairs = Vec::new();
    for (i, x) in simplices.iter().enumerate() {
        for (j, y) in simplices.iter().enumerate() {
            if is_face(y, x) {
                pairs.push((i, j));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let basis = pairs.iter().map(|&(i, j)| format!("({}|{})", s.label(simplices[i]), s.label(simplices[j]))).collect();
    let table =
        pairs.iter().map(|&(s1, t1)| pairs.iter().map(|&(s2, t2)| (t1 == s2).then(|| index[&(s1, t2)])).collect()).collect();
    let unit = (0..simplices.len()).map(|i| index[&(i, i)]).collect();
    AssocAlgebra { basis, table, unit }
}

/// Checks `count ≤ budget` and returns `count`.
fn check_budget(what: &str, d: usize, exp: usize, budget: u128) -> Result<usize> {
    let required = (d as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { what: what.to_string(), required, budget });
    }
    Ok(required as usize)
}

fn require_field(ring: RingSpec) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::Unsupported("Hochschild ranks are computed over Q or Z_p only".into()))
    }
}

/// Big-endian digits of `idx` in base `d`, `len` of them.
fn digits(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

fn encode(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

fn finish_column<R: Ring>(ring: &R, mut entries: Vec<(usize, i64)>) -> SparseVec<R::Elem> {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec<R::Elem> = Vec::with_capacity(entries.len());
    let mut i = 0;
    while i < entries.len() {
        let row = entries[i].0;
        let mut c = 0i64;
        while i < entries.len() && entries[i].0 == row {
            c += entries[i].1;
            i += 1;
        }
        let e = ring.from_i64(c);
        if !ring.is_zero(&e) {
            out.push((row, e));
        }
    }
    out
}

/// `d_n : A^{⊗(n+1)} → A^{⊗n}`,
/// `a_0⊗…⊗a_n ↦ Σ_{i<n} (−1)^i …⊗a_i a_{i+1}⊗… + (−1)^n a_n a_0⊗a_1⊗…⊗a_{n−1}`.
pub fn hochschild_boundary<R: Ring>(ring: &R, a: &AssocAlgebra, n: usize, exec: Execution) -> SparseMatrix<R::Elem> {
    let d = a.dim();
    let cols_n = d.pow(n as u32 + 1);
    let cols = exec.map_range(cols_n, |j| {
        let t = digits(j, d, n + 1);
        let mut entries = Vec::with_capacity(n + 1);
        for i in 0..n {
            if let Some(x) = a.mul(t[i], t[i + 1]) {
                let mut s = Vec::with_capacity(n);
                s.extend_from_slice(&t[..i]);
                s.push(x);
                s.extend_from_slice(&t[i + 2..]);
                entries.push((encode(&s, d), if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        if let Some(x) = a.mul(t[n], t[0]) {
            let mut s = Vec::with_capacity(n);
            s.push(x);
            s.extend_from_slice(&t[1..n]);
            entries.push((encode(&s, d), if n.is_multiple_of(2) { 1 } else { -1 }));
        }
        finish_column(ring, entries)
    });
    SparseMatrix::from_columns(d.pow(n as u32), cols)
}

/// `δ^n : Hom(A^{⊗n}, A) → Hom(A^{⊗(n+1)}, A)`,
/// `δf(a_1,…,a_{n+1}) = a_1 f(a_2,…) + Σ (−1)^i f(…, a_i a_{i+1}, …) + (−1)^{n+1} f(a_1,…,a_n) a_{n+1}`.
/// The map sending the tensor `u` to `b` and every other basis tensor to zero
/// has index `encode(u)·d + b`.
pub fn hochschild_coboundary<R: Ring>(ring: &R, a: &AssocAlgebra, n: usize, exec: Execution) -> SparseMatrix<R::Elem> {
    let d = a.dim();
    let fact = a.factorizations();
    let cols_n = d.pow(n as u32 + 1);
    let cols = exec.map_range(cols_n, |j| {
        let t = digits(j, d, n + 1);
        let (u, b) = (&t[..n], t[n]);
        let mut entries = Vec::new();
        let row = |w: &[usize], c: usize| encode(w, d) * d + c;
        for x in 0..d {
            if let Some(c) = a.mul(x, b) {
                let mut w = Vec::with_capacity(n + 1);
                w.push(x);
                w.extend_from_slice(u);
                entries.push((row(&w, c), 1));
            }
        }
        for i in 1..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &(p, q) in &fact[u[i - 1]] {
                let mut w = Vec::with_capacity(n + 1);
                w.extend_from_slice(&u[..i - 1]);
                w.push(p);
                w.push(q);
                w.extend_from_slice(&u[i..]);
                entries.push((row(&w, b), sign));
            }
        }
        let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
        for y in 0..d {
            if let Some(c) = a.mul(b, y) {
                let mut w = Vec::with_capacity(n + 1);
                w.extend_from_slice(u);
                w.push(y);
                entries.push((row(&w, c), sign));
            }
        }
        finish_column(ring, entries)
    });
    SparseMatrix::from_columns(d.pow(n as u32 + 2), cols)
}

/// Hochschild chain complex `C_0 … C_max_deg`, truncated at the top.
pub fn hochschild_chain_complex<R: Ring>(
    ring: &R,
    a: &AssocAlgebra,
    max_deg: usize,
    budget: u128,
    exec: Execution,
) -> Result<ChainComplex<R::Elem>> {
    let d = a.dim();
    let top = check_budget("Hochschild chains", d, max_deg + 1, budget)?;
    assert_eq!(top, d.pow(max_deg as u32 + 1), "dim C_n = dim(A)^(n+1)");
    let mut boundaries = vec![SparseMatrix::zeros(0, d)];
    for n in 1..=max_deg {
        boundaries.push(hochschild_boundary(ring, a, n, exec));
    }
    Ok(ChainComplex { boundaries, complete: false })
}

/// The Hochschild cochain complex stored as its dual chain complex, so that
/// [`cohomology_of_complex_with`] applies.
pub fn hochschild_cochain_complex<R: Ring>(
    ring: &R,
    a: &AssocAlgebra,
    max_deg: usize,
    budget: u128,
    exec: Execution,
) -> Result<ChainComplex<R::Elem>> {
    let d = a.dim();
    let top = check_budget("Hochschild cochains", d, max_deg + 1, budget)?;
    assert_eq!(top, d.pow(max_deg as u32 + 1), "dim C^n = dim(A)^(n+1)");
    let mut boundaries = vec![SparseMatrix::zeros(0, d)];
    for n in 0..max_deg {
        boundaries.push(hochschild_coboundary(ring, a, n, exec).transpose());
    }
    Ok(ChainComplex { boundaries, complete: false })
}

/// `HH_n(A, A)` for `n ≤ max_deg`; the top degree is truncated.
pub fn hochschild_homology(a: &AssocAlgebra, max_deg: usize, ring: RingSpec) -> Result<HomologyResult> {
    hochschild_homology_with(a, max_deg, ring, DEFAULT_HOCHSCHILD_BUDGET, Execution::default())
}

pub fn hochschild_homology_with(
    a: &AssocAlgebra,
    max_deg: usize,
    ring: RingSpec,
    budget: u128,
    exec: Execution,
) -> Result<HomologyResult> {
    require_field(ring)?;
    crate::with_ring!(ring, |r| {
        let cc = hochschild_chain_complex(&r, a, max_deg, budget, exec)?;
        homology_of_complex_with(&r, &cc, exec)
    })
}

/// `HH^n(A, A)` for `n ≤ max_deg`; the top degree is truncated.
pub fn hochschild_cohomology(a: &AssocAlgebra, max_deg: usize, ring: RingSpec) -> Result<HomologyResult> {
    hochschild_cohomology_with(a, max_deg, ring, DEFAULT_HOCHSCHILD_BUDGET, Execution::default())
}

pub fn hochschild_cohomology_with(
    a: &AssocAlgebra,
    max_deg: usize,
    ring: RingSpec,
    budget: u128,
    exec: Execution,
) -> Result<HomologyResult> {
    require_field(ring)?;
    crate::with_ring!(ring, |r| {
        let cc = hochschild_cochain_complex(&r, a, max_deg, budget, exec)?;
        cohomology_of_complex_with(&r, &cc, exec)
    })
}

/// Dimension of the center, from the linear system `xb − bx = 0`.
pub fn center_dimension<R: Euclidean>(ring: &R, a: &AssocAlgebra) -> usize {
    let d = a.dim();
    let cols = (0..d)
        .map(|x| {
            let mut entries = Vec::new();
            for b in 0..d {
                if let Some(c) = a.mul(x, b) {
                    entries.push((b * d + c, 1));
                }
                if let Some(c) = a.mul(b, x) {
                    entries.push((b * d + c, -1));
                }
            }
            finish_column(ring, entries)
        })
        .collect();
    d - rank(ring, &SparseMatrix::from_columns(d * d, cols))
}

/// Dimension of `A/[A, A]`.
pub fn commutator_quotient_dimension<R: Euclidean>(ring: &R, a: &AssocAlgebra) -> usize {
    let d = a.dim();
    let mut cols = Vec::new();
    for x in 0..d {
        for y in 0..d {
            let mut entries = Vec::new();
            if let Some(c) = a.mul(x, y) {
                entries.push((c, 1));
            }
            if let Some(c) = a.mul(y, x) {
                entries.push((c, -1));
            }
            let col = finish_column(ring, entries);
            if !col.is_empty() {
                cols.push(col);
            }
        }
    }
    d - rank(ring, &SparseMatrix::from_columns(d, cols))
}

/// Simplicial homology against path homology of `P(G_S)`, and both against
/// Hochschild (co)homology of `A_S` in degrees below `max_deg`. Over `Z`
/// only the first comparison runs.
pub fn verify_hochschild_comparison(s: &SimplicialComplex, ring: RingSpec, max_deg: usize) -> Result<ComparisonReport> {
    verify_hochschild_comparison_with(s, ring, max_deg, DEFAULT_HOCHSCHILD_BUDGET, Execution::default())
}

pub fn verify_hochschild_comparison_with(
    s: &SimplicialComplex,
    ring: RingSpec,
    max_deg: usize,
    budget: u128,
    exec: Execution,
) -> Result<ComparisonReport> {
    let mut report = ComparisonReport::new("Hochschild comparison", ring);
    let (simp_h, simp_c, path_h, path_c) = crate::with_ring!(ring, |r| {
        let cc = s.chain_complex(&r);
        let top = s.dim().unwrap_or(0);
        let g = cubical_digraph(s);
        let pc = path_complex_of_digraph(&g, top + 1)?;
        let oc = build_omega(&r, &pc, top + 1)?;
        let pcc = oc.chain_complex();
        (
            homology_of_complex_with(&r, &cc, exec)?,
            cohomology_of_complex_with(&r, &cc, exec)?,
            homology_of_complex_with(&r, &pcc, exec)?,
            cohomology_of_complex_with(&r, &pcc, exec)?,
        )
    });
    let path_deg = path_h.exact_degrees().min(max_deg);
    report.compare_results("simplicial H_ vs path H_", &simp_h, &path_h, path_deg);
    report.compare_results("simplicial H^ vs path H^", &simp_c, &path_c, path_deg);

    if !ring.is_field() {
        report.note("Hochschild ranks need a field; only the simplicial and path pipelines ran");
        return Ok(report);
    }
    let a = build_a_s(s);
    let failures = a.associativity_failures();
    report.identity("A_S associative", failures.is_empty(), format!("{} failing triples", failures.len()));
    report.identity("A_S unital", a.unit_holds(), format!("dim A_S = {}", a.dim()));
    let (hh, hc) = exec.join(
        || hochschild_homology_with(&a, max_deg, ring, budget, exec),
        || hochschild_cohomology_with(&a, max_deg, ring, budget, exec),
    );
    let (hh, hc) = (hh?, hc?);
    report.compare_results("simplicial H_ vs HH_", &simp_h, &hh, max_deg);
    report.compare_results("simplicial H^ vs HH^", &simp_c, &hc, max_deg);

    let (center, quotient) = crate::with_ring!(ring, |r| (center_dimension(&r, &a), commutator_quotient_dimension(&r, &a)));
    report.identity("HH^0 = center", hc.group(0).rank == center, format!("HH^0 {} vs center {center}", hc.group(0).rank));
    report.identity("center = components", center == s.components(), format!("center {center} vs {} components", s.components()));
    report.identity("HH_0 = A/[A,A]", hh.group(0).rank == quotient, format!("HH_0 {} vs quotient {quotient}", hh.group(0).rank));
    Ok(report)
}
