//! The geometric realization S(P) as a combinatorial singular Δ-complex.
//!
//! One cell per admissible path. Faces attach to the cell of the face path
//! when it is regular, and through an order-preserving collapse to the cell of
//! the reduced path otherwise.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::homology::{cohomology_of_complex_with, homology_of_complex_with, ChainComplex, HomologyResult};
use crate::linalg::{rank, Euclidean, Integers, PrimeField, Rationals, Ring, RingSpec, SparseMatrix};
use crate::model::{ElementaryPath, PathComplex, VertexSet};
use crate::omega::{build_omega, OmegaComplex};
use crate::par::Execution;
use crate::report::ComparisonReport;

/// Order-preserving surjection `{0..source_dim} → {0..target_dim}` given by
/// its preimage blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyRecord {
    pub source_dim: usize,
    pub target_dim: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl DegeneracyRecord {
    pub fn identity(dim: usize) -> Self {
        DegeneracyRecord { source_dim: dim, target_dim: dim, blocks: (0..=dim).map(|i| vec![i]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim
    }

    /// Image of each source position.
    pub fn map(&self) -> Vec<usize> {
        let mut out = vec![0; self.source_dim + 1];
        for (t, block) in self.blocks.iter().enumerate() {
            for &s in block {
                out[s] = t;
            }
        }
        out
    }

    pub fn is_monotone_surjection(&self) -> bool {
        let flat: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        self.blocks.len() == self.target_dim + 1
            && self.blocks.iter().all(|b| !b.is_empty())
            && flat == (0..=self.source_dim).collect::<Vec<_>>()
    }
}

/// Deletes the left member of the leftmost equal adjacent pair until the path
/// is regular.
pub fn reduce_path(e: &ElementaryPath) -> (ElementaryPath, DegeneracyRecord) {
    let mut verts = e.0.clone();
    let mut blocks: Vec<Vec<usize>> = (0..verts.len()).map(|i| vec![i]).collect();
    while let Some(i) = verts.windows(2).position(|w| w[0] == w[1]) {
        verts.remove(i);
        let left = blocks.remove(i);
        let right = std::mem::take(&mut blocks[i]);
        blocks[i] = left.into_iter().chain(right).collect();
    }
    let reduced = ElementaryPath(verts);
    let record = DegeneracyRecord { source_dim: e.dim(), target_dim: reduced.dim(), blocks };
    (reduced, record)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceAttachment {
    pub target: usize,
    pub degeneracy: Option<DegeneracyRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub id: usize,
    pub path: ElementaryPath,
    pub dim: usize,
    pub faces: Vec<FaceAttachment>,
    pub admissible: bool,
}

/// A cell that had to be added because a face of another cell was not
/// itself admissible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDiagnostic {
    pub path: String,
    pub dim: usize,
    pub required_by: String,
    pub in_path_complex: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    pub vertex_set: VertexSet,
    pub cells: Vec<Cell>,
    pub by_dim: Vec<Vec<usize>>,
    pub diagnostics: Vec<ClosureDiagnostic>,
    index: HashMap<ElementaryPath, usize>,
}

impl CellComplex {
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn cell_of(&self, p: &ElementaryPath) -> Option<&Cell> {
        self.index.get(p).map(|&i| &self.cells[i])
    }

    /// Position of a cell inside its dimension (its chain coordinate).
    pub fn position(&self, id: usize) -> usize {
        let c = &self.cells[id];
        id - self.by_dim[c.dim][0]
    }

    pub fn is_closure_clean(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub fn top_dim(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    pub fn render(&self, p: &ElementaryPath) -> String {
        self.vertex_set.render(p)
    }

    /// Checks that every attachment points at a cell of the right dimension.
    pub fn is_closed(&self) -> bool {
        self.cells.iter().all(|c| {
            c.faces.len() == if c.dim == 0 { 0 } else { c.dim + 1 }
                && c.faces.iter().all(|f| {
                    let t = &self.cells[f.target];
                    match &f.degeneracy {
                        None => t.dim + 1 == c.dim,
                        Some(r) => t.dim + 1 < c.dim && r.target_dim == t.dim && r.is_monotone_surjection(),
                    }
                })
        })
    }

    /// Rebuilds the lookup index after deserialization.
    pub fn from_parts(vertex_set: VertexSet, cells: Vec<Cell>, diagnostics: Vec<ClosureDiagnostic>) -> Self {
        let top = cells.iter().map(|c| c.dim).max();
        let mut by_dim = vec![Vec::new(); top.map_or(0, |t| t + 1)];
        for c in &cells {
            by_dim[c.dim].push(c.id);
        }
        let index = cells.iter().map(|c| (c.path.clone(), c.id)).collect();
        CellComplex { vertex_set, cells, by_dim, diagnostics, index }
    }
}

/// Cells from the admissible paths of `oc`, closed under faces.
pub fn build_realization<R: Ring>(pc: &PathComplex, oc: &OmegaComplex<R>) -> CellComplex {
    let top = oc.top_dim();
    let mut wanted: Vec<BTreeMap<ElementaryPath, Option<ClosureDiagnostic>>> = vec![BTreeMap::new(); top + 1];
    for (n, level) in oc.levels().iter().enumerate() {
        for p in &level.admissible {
            wanted[n].insert(p.clone(), None);
        }
    }
    for n in (1..=top).rev() {
        let current: Vec<ElementaryPath> = wanted[n].keys().cloned().collect();
        for p in current {
            for q in 0..=n {
                let face = p.omit(q);
                let target = if face.is_regular() { face } else { reduce_path(&face).0 };
                let d = target.dim();
                if !wanted[d].contains_key(&target) {
                    let diag = ClosureDiagnostic {
                        path: pc.render(&target),
                        dim: d,
                        required_by: pc.render(&p),
                        in_path_complex: pc.contains(&target),
                    };
                    wanted[d].insert(target, Some(diag));
                }
            }
        }
    }
    while wanted.len() > 1 && wanted.last().is_some_and(BTreeMap::is_empty) {
        wanted.pop();
    }

    let mut cells = Vec::new();
    let mut by_dim = Vec::new();
    let mut diagnostics = Vec::new();
    let mut index = HashMap::new();
    for (n, layer) in wanted.into_iter().enumerate() {
        let mut ids = Vec::new();
        for (p, diag) in layer {
            let id = cells.len();
            index.insert(p.clone(), id);
            ids.push(id);
            cells.push(Cell { id, path: p, dim: n, faces: Vec::new(), admissible: diag.is_none() });
            diagnostics.extend(diag);
        }
        by_dim.push(ids);
    }
    for cell in cells.iter_mut() {
        if cell.dim == 0 {
            continue;
        }
        cell.faces = (0..=cell.dim)
            .map(|q| {
                let face = cell.path.omit(q);
                if face.is_regular() {
                    FaceAttachment { target: index[&face], degeneracy: None }
                } else {
                    let (reduced, record) = reduce_path(&face);
                    FaceAttachment { target: index[&reduced], degeneracy: Some(record) }
                }
            })
            .collect();
    }
    diagnostics.sort_by(|a, b| (a.dim, &a.path).cmp(&(b.dim, &b.path)));
    CellComplex { vertex_set: pc.vertex_set().clone(), cells, by_dim, diagnostics, index }
}

/// Cellular boundary: `Σ (−1)^q` over the non-degenerate faces.
pub fn cellular_chain_complex<R: Ring>(ring: &R, cc: &CellComplex) -> ChainComplex<R::Elem> {
    let mut boundaries = Vec::with_capacity(cc.by_dim.len());
    for (n, ids) in cc.by_dim.iter().enumerate() {
        if n == 0 {
            boundaries.push(SparseMatrix::zeros(0, ids.len()));
            continue;
        }
        let mut triplets = Vec::new();
        for (j, &id) in ids.iter().enumerate() {
            for (q, f) in cc.cells[id].faces.iter().enumerate() {
                if f.degeneracy.is_none() {
                    let sign = if q % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) };
                    triplets.push((cc.position(f.target), j, sign));
                }
            }
        }
        boundaries.push(SparseMatrix::from_triplets(ring, cc.by_dim[n - 1].len(), ids.len(), triplets));
    }
    if boundaries.is_empty() {
        boundaries.push(SparseMatrix::zeros(0, 0));
    }
    ChainComplex { boundaries, complete: true }
}

/// Matrix of F_Δ in degree `n`: Ω_n basis columns written in cell coordinates.
/// `None` when some basis vector uses a path that is not a cell.
pub fn inclusion_matrix<R: Ring>(cc: &CellComplex, oc: &OmegaComplex<R>, n: usize) -> Option<SparseMatrix<R::Elem>> {
    let level = oc.level(n);
    let rows = cc.by_dim.get(n).map_or(0, Vec::len);
    let mut cols = Vec::with_capacity(level.rank());
    for col in level.basis.columns() {
        let mut v = Vec::with_capacity(col.len());
        for (i, c) in col {
            let cell = cc.cell_of(&level.allowed[*i])?;
            v.push((cc.position(cell.id), c.clone()));
        }
        v.sort_by_key(|e| e.0);
        cols.push(v);
    }
    Some(SparseMatrix::from_columns(rows, cols))
}

/// Checks `∂_cell ∘ F_n = F_{n−1} ∘ D_n` and full column rank of every `F_n`.
pub fn check_f_delta<R: Euclidean>(ring: &R, cc: &CellComplex, oc: &OmegaComplex<R>, report: &mut ComparisonReport) {
    let cell_cx = cellular_chain_complex(ring, cc);
    let tag = ring.spec().symbol();
    let mut prev: Option<SparseMatrix<R::Elem>> = None;
    for n in 0..=oc.top_dim() {
        let Some(f) = inclusion_matrix(cc, oc, n) else {
            report.identity(format!("F_Δ defined in degree {n} over {tag}"), false, "Ω basis uses a non-cell path");
            return;
        };
        let r = rank(ring, &f);
        report.identity(
            format!("F_Δ injective in degree {n} over {tag}"),
            r == f.ncols(),
            format!("rank {r} of {} columns", f.ncols()),
        );
        if n >= 1 {
            let lower = prev.as_ref().expect("previous degree");
            let empty = SparseMatrix::zeros(lower.nrows(), f.nrows());
            let cell_d = cell_cx.boundaries.get(n).unwrap_or(&empty);
            let lhs = if cell_d.ncols() == f.nrows() { cell_d.mul(ring, &f).ok() } else { None };
            let rhs = lower.mul(ring, &oc.level(n).boundary).ok();
            let holds = matches!((&lhs, &rhs), (Some(a), Some(b)) if a == b);
            report.identity(format!("F_Δ chain map in degree {n} over {tag}"), holds, "∂_cell·F_n = F_{n-1}·D_n");
        }
        prev = Some(f);
    }
}

/// Paths of `P_n` surviving the pruning rule: drop any path owning a
/// forbidden face that no other surviving path shares. A superset of the
/// admissible paths; reported only as a diagnostic.
pub fn pruning_candidates(pc: &PathComplex, n: usize) -> BTreeSet<ElementaryPath> {
    let mut alive: BTreeSet<ElementaryPath> = pc.paths(n).clone();
    if n == 0 {
        return alive;
    }
    loop {
        let mut owners: HashMap<ElementaryPath, usize> = HashMap::new();
        for p in &alive {
            for q in 0..=n {
                let f = p.omit(q);
                if f.is_regular() && !pc.contains(&f) {
                    *owners.entry(f).or_default() += 1;
                }
            }
        }
        let doomed: Vec<ElementaryPath> = alive
            .iter()
            .filter(|p| {
                (0..=n).any(|q| {
                    let f = p.omit(q);
                    owners.get(&f) == Some(&1)
                })
            })
            .cloned()
            .collect();
        if doomed.is_empty() {
            return alive;
        }
        for p in doomed {
            alive.remove(&p);
        }
    }
}

fn homology_pair<R: Euclidean>(
    ring: &R,
    cx: &ChainComplex<R::Elem>,
    exec: Execution,
) -> Result<(HomologyResult, HomologyResult)> {
    let (h, c) = exec.join(|| homology_of_complex_with(ring, cx, exec), || cohomology_of_complex_with(ring, cx, exec));
    Ok((h?, c?))
}

fn path_side<R: Euclidean>(
    ring: &R,
    pc: &PathComplex,
    top_dim: usize,
    exec: Execution,
) -> Result<(OmegaComplex<R>, HomologyResult, HomologyResult)> {
    let oc = build_omega(ring, pc, top_dim)?;
    let (h, c) = homology_pair(ring, &oc.chain_complex(), exec)?;
    Ok((oc, h, c))
}

/// Path (co)homology against cellular (co)homology of S(P), plus the F_Δ
/// matrix identities. Only degrees not affected by truncation are compared.
pub fn verify_realization_isomorphism(pc: &PathComplex, ring: RingSpec, top_dim: usize) -> Result<ComparisonReport> {
    verify_realization_isomorphism_with(pc, ring, top_dim, Execution::default())
}

pub fn verify_realization_isomorphism_with(
    pc: &PathComplex,
    ring: RingSpec,
    top_dim: usize,
    exec: Execution,
) -> Result<ComparisonReport> {
    let oc_z = build_omega(&Integers, pc, top_dim)?;
    let cells = build_realization(pc, &oc_z);
    let mut report = ComparisonReport::new("realization", ring);

    let (path, cell) = match ring {
        RingSpec::Integers => {
            let z = Integers;
            let (a, b) = exec.join(
                || homology_pair(&z, &oc_z.chain_complex(), exec),
                || homology_pair(&z, &cellular_chain_complex(&z, &cells), exec),
            );
            (a?, b?)
        }
        RingSpec::Rationals => {
            let (a, b) = exec.join(
                || path_side(&Rationals, pc, top_dim, exec),
                || homology_pair(&Rationals, &cellular_chain_complex(&Rationals, &cells), exec),
            );
            let (oc, h, c) = a?;
            check_ring_f_delta(&Rationals, &cells, &oc, &mut report);
            ((h, c), b?)
        }
        RingSpec::PrimeField(p) => {
            let f = PrimeField::new_unchecked(p);
            let (a, b) =
                exec.join(|| path_side(&f, pc, top_dim, exec), || homology_pair(&f, &cellular_chain_complex(&f, &cells), exec));
            let (oc, h, c) = a?;
            check_ring_f_delta(&f, &cells, &oc, &mut report);
            ((h, c), b?)
        }
    };
    let ((ph, pcoh), (ch, ccoh)) = (path, cell);
    let exact = ph.exact_degrees();
    report.compare_results("H (path vs cellular)", &ph, &ch, exact);
    report.compare_results("H^ (path vs cellular)", &pcoh, &ccoh, exact);
    check_f_delta(&Integers, &cells, &oc_z, &mut report);
    report.identity(
        "cellular ∂∂ = 0",
        cellular_chain_complex(&Integers, &cells).check_exact(&Integers).is_ok(),
        format!("cells per dimension {:?}", cells.counts()),
    );
    for d in &cells.diagnostics {
        report.note(format!("closure cell {} (dim {}) added for {}", d.path, d.dim, d.required_by));
    }
    for n in 1..=oc_z.top_dim().min(pc.max_dim()) {
        let pruned = pruning_candidates(pc, n);
        let adm = &oc_z.level(n).admissible;
        if &pruned != adm {
            report.note(format!("pruning rule keeps {} paths in dim {n}, admissible set has {}", pruned.len(), adm.len()));
        }
    }
    Ok(report)
}

fn check_ring_f_delta<R: Euclidean>(ring: &R, cells: &CellComplex, oc: &OmegaComplex<R>, report: &mut ComparisonReport) {
    let covered = oc.levels().iter().all(|l| l.admissible.iter().all(|p| cells.cell_of(p).is_some()));
    if covered {
        check_f_delta(ring, cells, oc, report);
    } else {
        report.note(format!("Ω over {} uses paths that are not Z-admissible; F_Δ checked over Z only", ring.spec().symbol()));
    }
}

/// Corner positions on the moment curve plus barycenter, for cells of
/// dimension at most 3.
pub fn cell_coordinates(cell: &Cell) -> Option<Vec<[f64; 3]>> {
    if cell.dim > 3 {
        return None;
    }
    let corner = |v: usize| {
        let t = v as f64 + 1.0;
        [t, t * t / 4.0, t * t * t / 16.0]
    };
    let mut pts: Vec<[f64; 3]> = cell.path.0.iter().map(|&v| corner(v)).collect();
    let k = pts.len() as f64;
    let bary = pts.iter().fold([0.0; 3], |acc, p| [acc[0] + p[0] / k, acc[1] + p[1] / k, acc[2] + p[2] / k]);
    pts.push(bary);
    Some(pts)
}
