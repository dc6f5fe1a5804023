//! Cartesian product and join of path complexes, the shuffle cross product,
//! and a Künneth verifier.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{homology_of_complex_with, FgAbelianGroup, HomologyResult};
use crate::linalg::{rank, Euclidean, Ring, RingSpec, SpanSolver, SparseMatrix};
use crate::model::{ElementaryPath, PathComplex, VertexSet};
use crate::omega::{build_omega, Chain, OmegaComplex};
use crate::par::Execution;
use crate::report::KunnethReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Horizontal,
    Vertical,
}

/// Monotone lattice path from `(0, 0)` to `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StairPath {
    pub steps: Vec<Step>,
}

impl StairPath {
    /// Squares below the path: each horizontal step adds the current height.
    pub fn area(&self) -> usize {
        let mut height = 0;
        let mut area = 0;
        for s in &self.steps {
            match s {
                Step::Horizontal => area += height,
                Step::Vertical => height += 1,
            }
        }
        area
    }

    pub fn sign(&self) -> i64 {
        if self.area().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// All `C(m+n, m)` stair paths in an `m × n` grid, horizontal-first order.
pub fn stair_paths(m: usize, n: usize) -> Vec<StairPath> {
    fn rec(m: usize, n: usize, prefix: &mut Vec<Step>, out: &mut Vec<StairPath>) {
        if m == 0 && n == 0 {
            out.push(StairPath { steps: prefix.clone() });
            return;
        }
        if m > 0 {
            prefix.push(Step::Horizontal);
            rec(m - 1, n, prefix, out);
            prefix.pop();
        }
        if n > 0 {
            prefix.push(Step::Vertical);
            rec(m, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::with_capacity(m + n), &mut out);
    out
}

/// Product vertex id of `(x, y)` when the second factor has `ny` vertices.
pub fn product_vertex(x: usize, y: usize, ny: usize) -> usize {
    x * ny + y
}

/// The path `e_σ` read along a stair path.
pub fn stair_product_path(ex: &ElementaryPath, ey: &ElementaryPath, sigma: &StairPath, ny: usize) -> ElementaryPath {
    let (mut i, mut j) = (0, 0);
    let mut v = vec![product_vertex(ex.0[0], ey.0[0], ny)];
    for s in &sigma.steps {
        match s {
            Step::Horizontal => i += 1,
            Step::Vertical => j += 1,
        }
        v.push(product_vertex(ex.0[i], ey.0[j], ny));
    }
    ElementaryPath(v)
}

/// `e_x × e_y = Σ_σ (−1)^{|σ|} e_σ`.
pub fn cross_product_paths<R: Ring>(ring: &R, ex: &ElementaryPath, ey: &ElementaryPath, ny: usize) -> Chain<R::Elem> {
    let mut out = Chain::zero(ex.dim() + ey.dim());
    for sigma in stair_paths(ex.dim(), ey.dim()) {
        out.add_term(ring, stair_product_path(ex, ey, &sigma, ny), &ring.from_i64(sigma.sign()));
    }
    out
}

/// Bilinear extension of [`cross_product_paths`].
pub fn cross_product_chains<R: Ring>(ring: &R, u: &Chain<R::Elem>, v: &Chain<R::Elem>, ny: usize) -> Chain<R::Elem> {
    let mut out = Chain::zero(u.dim + v.dim);
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            out.add_scaled(ring, &ring.mul(ca, cb), &cross_product_paths(ring, a, b, ny));
        }
    }
    out
}

/// Concatenation `u v` extended bilinearly (the join product on chains).
pub fn join_chains<R: Ring>(ring: &R, u: &Chain<R::Elem>, v: &Chain<R::Elem>, offset: usize) -> Chain<R::Elem> {
    let mut out = Chain::zero(u.dim + v.dim + 1);
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            let shifted = ElementaryPath(b.0.iter().map(|y| y + offset).collect());
            out.add_term(ring, a.concat(&shifted), &ring.mul(ca, cb));
        }
    }
    out
}

pub const DEFAULT_SEPARATOR: &str = "|";

/// `P(X) ⊞ P(Y)` up to dimension `max_dim` (default: the sum of the factor
/// dimensions).
pub fn cartesian_product(px: &PathComplex, py: &PathComplex, max_dim: Option<usize>) -> Result<PathComplex> {
    cartesian_product_with_separator(px, py, max_dim, DEFAULT_SEPARATOR)
}

pub fn cartesian_product_with_separator(
    px: &PathComplex,
    py: &PathComplex,
    max_dim: Option<usize>,
    sep: &str,
) -> Result<PathComplex> {
    px.ensure_regular_valid()?;
    py.ensure_regular_valid()?;
    let (xs, ys) = (px.vertex_set(), py.vertex_set());
    let ny = ys.len();
    let mut labels = Vec::with_capacity(xs.len() * ny);
    for x in xs.names() {
        for y in ys.names() {
            labels.push(format!("{x}{sep}{y}"));
        }
    }
    let vs = VertexSet::from_labels(labels)?;
    let top = max_dim.unwrap_or(px.max_dim() + py.max_dim()).min(px.max_dim() + py.max_dim());
    let mut pc = PathComplex::new(vs, true);
    for k in 0..=top {
        for s in 0..=k {
            let stairs = stair_paths(s, k - s);
            for a in px.paths(s) {
                for b in py.paths(k - s) {
                    for sigma in &stairs {
                        pc.insert(stair_product_path(a, b, sigma, ny));
                    }
                }
            }
        }
    }
    debug_assert!(pc.validate().is_valid());
    Ok(pc)
}

/// `P(X) ∗ P(Y)`: all concatenations `uv` together with `P(X)` and `P(Y)`.
/// Vertex ids of `Y` are shifted by `|V(X)|`.
pub fn join(px: &PathComplex, py: &PathComplex, max_dim: Option<usize>) -> Result<PathComplex> {
    px.ensure_regular_valid()?;
    py.ensure_regular_valid()?;
    let shared: Vec<String> = py.vertex_set().names().iter().filter(|n| px.vertex_set().id(n).is_some()).cloned().collect();
    if !shared.is_empty() {
        return Err(Error::NonDisjointVertices(shared));
    }
    let offset = px.vertex_set().len();
    let labels = px.vertex_set().names().iter().chain(py.vertex_set().names()).cloned();
    let vs = VertexSet::from_labels(labels)?;
    let full = px.max_dim() + py.max_dim() + 1;
    let top = max_dim.unwrap_or(full).min(full);
    let shift = |b: &ElementaryPath| ElementaryPath(b.0.iter().map(|y| y + offset).collect());
    let mut pc = PathComplex::new(vs, true);
    for a in px.iter().filter(|a| a.dim() <= top) {
        pc.insert(a.clone());
    }
    for b in py.iter().filter(|b| b.dim() <= top) {
        pc.insert(shift(b));
    }
    for a in px.iter() {
        for b in py.iter() {
            if a.dim() + b.dim() < top {
                pc.insert(a.concat(&shift(b)));
            }
        }
    }
    debug_assert!(pc.validate().is_valid());
    Ok(pc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KunnethMode {
    Product,
    Join,
}

/// Reduced homology: one fewer free summand in degree 0.
pub fn reduced(h: &HomologyResult) -> Vec<FgAbelianGroup> {
    let mut g = h.groups.clone();
    if let Some(g0) = g.first_mut() {
        g0.rank = g0.rank.saturating_sub(1);
    }
    g
}

/// Right-hand side of the product Künneth formula in degree `n`.
pub fn product_rhs(hx: &[FgAbelianGroup], hy: &[FgAbelianGroup], n: usize) -> FgAbelianGroup {
    let get = |h: &[FgAbelianGroup], i: usize| h.get(i).cloned().unwrap_or_default();
    let mut parts = Vec::new();
    for i in 0..=n {
        parts.push(get(hx, i).tensor(&get(hy, n - i)));
    }
    for i in 0..n {
        parts.push(get(hx, i).tor(&get(hy, n - 1 - i)));
    }
    FgAbelianGroup::sum_all(&parts)
}

/// Join Künneth in degree `n` from reduced factor homology: the sum over
/// `p + q = n − 1` of tensors and over `p + q = n − 2` of Tor terms, with the
/// free summand of degree 0 added back.
pub fn join_rhs(rx: &[FgAbelianGroup], ry: &[FgAbelianGroup], n: usize) -> FgAbelianGroup {
    let get = |h: &[FgAbelianGroup], i: usize| h.get(i).cloned().unwrap_or_default();
    let mut parts = Vec::new();
    if n >= 1 {
        for p in 0..n {
            parts.push(get(rx, p).tensor(&get(ry, n - 1 - p)));
        }
    }
    if n >= 2 {
        for p in 0..n - 1 {
            parts.push(get(rx, p).tor(&get(ry, n - 2 - p)));
        }
    }
    if n == 0 {
        parts.push(FgAbelianGroup::free(1));
    }
    FgAbelianGroup::sum_all(&parts)
}

/// Largest size for which the chain-level decomposition checks run.
pub const CHAIN_CHECK_LIMIT: usize = 4000;

/// Direct homology of the product or join against the Künneth prediction,
/// plus the Ω rank identity and chain-level checks.
pub fn verify_kunneth(
    px: &PathComplex,
    py: &PathComplex,
    ring: RingSpec,
    top_dim: usize,
    mode: KunnethMode,
) -> Result<KunnethReport> {
    verify_kunneth_with(px, py, ring, top_dim, mode, Execution::default())
}

pub fn verify_kunneth_with(
    px: &PathComplex,
    py: &PathComplex,
    ring: RingSpec,
    top_dim: usize,
    mode: KunnethMode,
    exec: Execution,
) -> Result<KunnethReport> {
    let pz = match mode {
        KunnethMode::Product => cartesian_product(px, py, Some(top_dim + 1))?,
        KunnethMode::Join => join(px, py, Some(top_dim + 1))?,
    };
    crate::with_ring!(ring, |r| verify_kunneth_in(&r, px, py, &pz, top_dim, mode, exec))
}

fn verify_kunneth_in<R: Euclidean>(
    ring: &R,
    px: &PathComplex,
    py: &PathComplex,
    pz: &PathComplex,
    top_dim: usize,
    mode: KunnethMode,
    exec: Execution,
) -> Result<KunnethReport> {
    let (ox, (oy, oz)) = exec.join(
        || build_omega(ring, px, top_dim),
        || exec.join(|| build_omega(ring, py, top_dim), || build_omega(ring, pz, top_dim)),
    );
    let (ox, oy, oz) = (ox?, oy?, oz?);
    let (hx, (hy, hz)) = exec.join(
        || homology_of_complex_with(ring, &ox.chain_complex(), exec),
        || {
            exec.join(
                || homology_of_complex_with(ring, &oy.chain_complex(), exec),
                || homology_of_complex_with(ring, &oz.chain_complex(), exec),
            )
        },
    );
    let (hx, hy, hz) = (hx?, hy?, hz?);

    let title = match mode {
        KunnethMode::Product => "Künneth (product)",
        KunnethMode::Join => "Künneth (join)",
    };
    let mut report = KunnethReport::new(title, ring.spec());
    let (ex, ey, ez) = (hx.exact_degrees(), hy.exact_degrees(), hz.exact_degrees());
    let degrees: Vec<usize> = (0..=top_dim)
        .filter(|&n| match mode {
            KunnethMode::Product => n < ez && n < ex && n < ey,
            KunnethMode::Join => n < ez && (n == 0 || (n - 1 < ex && n - 1 < ey)),
        })
        .collect();
    for &n in &degrees {
        let rhs = match mode {
            KunnethMode::Product => product_rhs(&hx.groups, &hy.groups, n),
            KunnethMode::Join => join_rhs(&reduced(&hx), &reduced(&hy), n),
        };
        report.compare("H (direct vs Künneth)", n, hz.group(n).display_over(ring.spec()), rhs.display_over(ring.spec()));
    }

    let (rx, ry, rz) = (ox.ranks(), oy.ranks(), oz.ranks());
    for k in 0..=top_dim {
        let predicted: usize = match mode {
            KunnethMode::Product => (0..=k).map(|i| rx[i] * ry[k - i]).sum(),
            KunnethMode::Join => {
                // Augmented ranks: degree −1 has rank 1.
                let aug = |r: &[usize], p: isize| if p < 0 { 1 } else { r[p as usize] };
                (-1..=(k as isize)).map(|p| aug(&rx, p) * aug(&ry, k as isize - 1 - p)).sum()
            }
        };
        report.identity(
            format!("rank Ω_{k} identity"),
            predicted == rz[k],
            format!("direct {} vs tensor sum {predicted}", rz[k]),
        );
    }

    let ny = py.vertex_set().len();
    for k in 0..=top_dim {
        let pairs = decomposition_columns(px, py, k, mode);
        if pairs.len() > CHAIN_CHECK_LIMIT || oz.level(k).allowed.len() > CHAIN_CHECK_LIMIT {
            report.note(format!(
                "chain-level checks skipped in degree {k} ({} path pairs, {} paths in P_{k})",
                pairs.len(),
                oz.level(k).allowed.len()
            ));
            continue;
        }
        chain_level_checks(ring, &ox, &oy, &oz, k, mode, ny, px.vertex_set().len(), &pairs, &mut report)?;
    }
    Ok(report)
}

/// Path pairs `(α, β)` whose products span the degree-`k` chains; `None`
/// stands for the empty path in join mode.
type PathPair = (Option<ElementaryPath>, Option<ElementaryPath>);

fn decomposition_columns(px: &PathComplex, py: &PathComplex, k: usize, mode: KunnethMode) -> Vec<PathPair> {
    let mut out = Vec::new();
    match mode {
        KunnethMode::Product => {
            for s in 0..=k {
                for a in px.paths(s) {
                    for b in py.paths(k - s) {
                        out.push((Some(a.clone()), Some(b.clone())));
                    }
                }
            }
        }
        KunnethMode::Join => {
            for a in px.paths(k) {
                out.push((Some(a.clone()), None));
            }
            for b in py.paths(k) {
                out.push((None, Some(b.clone())));
            }
            for s in 0..k {
                for a in px.paths(s) {
                    for b in py.paths(k - 1 - s) {
                        out.push((Some(a.clone()), Some(b.clone())));
                    }
                }
            }
        }
    }
    out
}

fn pair_chain<R: Ring>(ring: &R, pair: &PathPair, mode: KunnethMode, ny: usize, nx: usize) -> Chain<R::Elem> {
    let shift = |b: &ElementaryPath| ElementaryPath(b.0.iter().map(|y| y + nx).collect());
    match (mode, pair) {
        (KunnethMode::Product, (Some(a), Some(b))) => cross_product_paths(ring, a, b, ny),
        (KunnethMode::Join, (Some(a), Some(b))) => Chain::basis(ring, a.concat(&shift(b))),
        (KunnethMode::Join, (Some(a), None)) => Chain::basis(ring, a.clone()),
        (KunnethMode::Join, (None, Some(b))) => Chain::basis(ring, shift(b)),
        _ => unreachable!("pair shape matches mode"),
    }
}

#[allow(clippy::too_many_arguments)]
fn chain_level_checks<R: Euclidean>(
    ring: &R,
    ox: &OmegaComplex<R>,
    oy: &OmegaComplex<R>,
    oz: &OmegaComplex<R>,
    k: usize,
    mode: KunnethMode,
    ny: usize,
    nx: usize,
    pairs: &[PathPair],
    report: &mut KunnethReport,
) -> Result<()> {
    let lz = oz.level(k);
    let index: HashMap<&ElementaryPath, usize> = lz.allowed.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let to_vec = |c: &Chain<R::Elem>| -> Option<Vec<(usize, R::Elem)>> {
        let mut v = Vec::with_capacity(c.terms.len());
        for (p, x) in &c.terms {
            v.push((*index.get(p)?, x.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    };

    // Linear independence of the path-pair products.
    let mut cols = Vec::with_capacity(pairs.len());
    for pair in pairs {
        match to_vec(&pair_chain(ring, pair, mode, ny, nx)) {
            Some(v) => cols.push(v),
            None => {
                report.identity(format!("products lie in P_{k}"), false, "a product path is missing from the complex");
                return Ok(());
            }
        }
    }
    let products = SparseMatrix::from_columns(lz.allowed.len(), cols);
    let r = rank(ring, &products);
    report.identity(
        format!("path-pair products independent in degree {k}"),
        r == pairs.len(),
        format!("rank {r} of {}", pairs.len()),
    );
    if r != pairs.len() {
        return Ok(());
    }

    // Products of Ω basis vectors land in Ω_k(Z).
    let omega_solver = SpanSolver::new(ring, &lz.basis)?;
    let mut closed = true;
    let mut checked = 0usize;
    for (u, v) in factor_chains(ox, oy, k, mode) {
        let w = match (&u, &v) {
            (Some(u), Some(v)) => match mode {
                KunnethMode::Product => cross_product_chains(ring, u, v, ny),
                KunnethMode::Join => join_chains(ring, u, v, nx),
            },
            (Some(u), None) => u.clone(),
            (None, Some(v)) => {
                let mut c = Chain::zero(v.dim);
                for (p, x) in &v.terms {
                    c.add_term(ring, ElementaryPath(p.0.iter().map(|y| y + nx).collect()), x);
                }
                c
            }
            (None, None) => continue,
        };
        checked += 1;
        let ok = to_vec(&w).is_some_and(|vec| omega_solver.solve(&vec).is_ok());
        closed &= ok;
    }
    report.identity(format!("Ω products lie in Ω_{k}"), closed, format!("{checked} products checked"));

    // Decompose each Ω_k(Z) basis vector over path pairs; the factor paths
    // used must be admissible.
    let pair_solver = SpanSolver::new(ring, &products)?;
    let adm_x: BTreeSet<&ElementaryPath> = ox.levels().iter().flat_map(|l| l.admissible.iter()).collect();
    let adm_y: BTreeSet<&ElementaryPath> = oy.levels().iter().flat_map(|l| l.admissible.iter()).collect();
    let mut transfer = true;
    for col in lz.basis.columns() {
        match pair_solver.solve(col) {
            Ok(coeffs) => {
                for (j, _) in coeffs {
                    let (a, b) = &pairs[j];
                    transfer &= a.as_ref().is_none_or(|a| adm_x.contains(a));
                    transfer &= b.as_ref().is_none_or(|b| adm_y.contains(b));
                }
            }
            Err(_) => transfer = false,
        }
    }
    report.identity(
        format!("admissible factors in degree {k}"),
        transfer,
        format!("{} Ω_{k} basis vectors decomposed", lz.rank()),
    );
    Ok(())
}

type FactorPair<E> = (Option<Chain<E>>, Option<Chain<E>>);

fn factor_chains<R: Ring>(ox: &OmegaComplex<R>, oy: &OmegaComplex<R>, k: usize, mode: KunnethMode) -> Vec<FactorPair<R::Elem>> {
    let basis = |oc: &OmegaComplex<R>, n: usize| -> Vec<Chain<R::Elem>> {
        if n > oc.top_dim() {
            return Vec::new();
        }
        (0..oc.level(n).rank()).map(|i| oc.basis_chain(n, i)).collect()
    };
    let mut out = Vec::new();
    match mode {
        KunnethMode::Product => {
            for s in 0..=k {
                for u in basis(ox, s) {
                    for v in basis(oy, k - s) {
                        out.push((Some(u.clone()), Some(v)));
                    }
                }
            }
        }
        KunnethMode::Join => {
            for u in basis(ox, k) {
                out.push((Some(u), None));
            }
            for v in basis(oy, k) {
                out.push((None, Some(v)));
            }
            for s in 0..k {
                for u in basis(ox, s) {
                    for v in basis(oy, k - 1 - s) {
                        out.push((Some(u.clone()), Some(v)));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Integers;
    use crate::model::{path_complex_of_digraph, Digraph};
    use crate::omega::regular_boundary;

    fn p(v: &[usize]) -> ElementaryPath {
        ElementaryPath(v.to_vec())
    }

    fn cycle3(prefix: &str) -> PathComplex {
        let vs = VertexSet::from_labels((0..3).map(|i| format!("{prefix}{i}"))).unwrap();
        let g = Digraph::from_edges(vs, [(0, 1), (1, 2), (2, 0)]).unwrap();
        path_complex_of_digraph(&g, 3).unwrap()
    }

    fn point(label: &str) -> PathComplex {
        PathComplex::from_paths(VertexSet::from_labels([label]).unwrap(), true, [p(&[0])])
    }

    #[test]
    fn stair_areas() {
        let s = stair_paths(2, 2);
        assert_eq!(s.len(), 6);
        let mut hist = [0; 5];
        for x in &s {
            hist[x.area()] += 1;
        }
        assert_eq!(hist, [1, 1, 2, 1, 1]);
    }

    #[test]
    fn cross_examples() {
        let z = Integers;
        let c = cross_product_paths(&z, &p(&[0]), &p(&[0, 1]), 2);
        assert_eq!(c.terms.len(), 1);
        assert!(c.terms.contains_key(&p(&[0, 1])));
        // a=0, b=1 in X; u=0, v=1 in Y; (x, y) ↦ 2x + y.
        let c = cross_product_paths(&z, &p(&[0, 1]), &p(&[0, 1]), 2);
        assert_eq!(c.terms[&p(&[0, 2, 3])], 1.into());
        assert_eq!(c.terms[&p(&[0, 1, 3])], (-1).into());
    }

    #[test]
    fn boundary_of_a_cross_product() {
        let z = Integers;
        let u = Chain::basis(&z, p(&[0, 1, 2]));
        let v = Chain::basis(&z, p(&[1, 0]));
        let lhs = regular_boundary(&z, &cross_product_chains(&z, &u, &v, 3));
        let mut rhs = cross_product_chains(&z, &regular_boundary(&z, &u), &v, 3);
        rhs.add_scaled(&z, &1.into(), &cross_product_chains(&z, &u, &regular_boundary(&z, &v), 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn point_times_complex() {
        let y = cycle3("y");
        let z = cartesian_product(&point("*"), &y, None).unwrap();
        assert_eq!(z.counts(), y.counts());
        assert_eq!(z.vertex_set().name(1), "*|y1");
    }

    #[test]
    fn edge_times_edge_has_two_squares() {
        let e = |a: &str, b: &str| {
            PathComplex::from_paths(VertexSet::from_labels([a, b]).unwrap(), true, [p(&[0]), p(&[1]), p(&[0, 1])])
        };
        let z = cartesian_product(&e("a", "b"), &e("u", "v"), None).unwrap();
        assert_eq!(z.counts(), vec![4, 4, 2]);
    }

    #[test]
    fn joins() {
        let z = join(&point("a"), &point("b"), None).unwrap();
        assert_eq!(z.counts(), vec![2, 1]);
        let edge = PathComplex::from_paths(VertexSet::from_labels(["a", "b"]).unwrap(), true, [p(&[0]), p(&[1]), p(&[0, 1])]);
        let z = join(&edge, &point("c"), None).unwrap();
        assert_eq!(z.counts(), vec![3, 3, 1]);
        assert!(matches!(join(&point("a"), &point("a"), None), Err(Error::NonDisjointVertices(_))));
    }

    #[test]
    fn join_of_discrete_pairs_is_a_square() {
        let two = |a: &str, b: &str| PathComplex::from_paths(VertexSet::from_labels([a, b]).unwrap(), true, [p(&[0]), p(&[1])]);
        let z = join(&two("a", "b"), &two("c", "d"), None).unwrap();
        let oc = build_omega(&Integers, &z, 2).unwrap();
        let h = crate::homology::homology_of_complex(&Integers, &oc.chain_complex()).unwrap();
        assert_eq!(h.betti(), vec![1, 1, 0]);
        let r = verify_kunneth(&two("a", "b"), &two("c", "d"), RingSpec::Integers, 2, KunnethMode::Join).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn torus_from_two_cycles() {
        let r = verify_kunneth(&cycle3("x"), &cycle3("y"), RingSpec::Integers, 3, KunnethMode::Product).unwrap();
        assert!(r.passed(), "{r}");
        let degs: Vec<&str> = r.comparisons.iter().map(|c| c.left.as_str()).collect();
        assert_eq!(degs, vec!["Z", "Z^2", "Z"]);
    }

    #[test]
    fn point_join_point() {
        let r = verify_kunneth(&point("a"), &point("b"), RingSpec::Integers, 1, KunnethMode::Join).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.comparisons[0].left, "Z");
    }

    #[test]
    fn field_kunneth() {
        let r = verify_kunneth(&cycle3("x"), &cycle3("y"), RingSpec::PrimeField(2), 3, KunnethMode::Product).unwrap();
        assert!(r.passed(), "{r}");
    }
}
