//! The chain complex Ω_*: allowed chains whose regular boundary is allowed.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::homology::ChainComplex;
use crate::linalg::{kernel_basis, Euclidean, Ring, RingSpec, SpanSolver, SparseMatrix, SparseVec};
use crate::model::{ElementaryPath, PathComplex};

/// Formal linear combination of paths of one dimension, zero-free.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<E> {
    pub dim: usize,
    pub terms: BTreeMap<ElementaryPath, E>,
}

impl<E: Clone + PartialEq> Chain<E> {
    pub fn zero(dim: usize) -> Self {
        Chain { dim, terms: BTreeMap::new() }
    }

    pub fn basis<R: Ring<Elem = E>>(ring: &R, p: ElementaryPath) -> Self {
        let dim = p.dim();
        Chain { dim, terms: BTreeMap::from([(p, ring.one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term<R: Ring<Elem = E>>(&mut self, ring: &R, p: ElementaryPath, c: &E) {
        debug_assert_eq!(p.dim(), self.dim);
        let slot = self.terms.entry(p.clone()).or_insert_with(|| ring.zero());
        *slot = ring.add(slot, c);
        if ring.is_zero(slot) {
            self.terms.remove(&p);
        }
    }

    /// `self + c * other`.
    pub fn add_scaled<R: Ring<Elem = E>>(&mut self, ring: &R, c: &E, other: &Self) {
        for (p, v) in &other.terms {
            self.add_term(ring, p.clone(), &ring.mul(c, v));
        }
    }

    pub fn support(&self) -> impl Iterator<Item = &ElementaryPath> {
        self.terms.keys()
    }
}

/// Boundary with non-regular faces deleted. The boundary of a 0-chain is zero.
pub fn regular_boundary<R: Ring>(ring: &R, c: &Chain<R::Elem>) -> Chain<R::Elem> {
    if c.dim == 0 {
        return Chain::zero(0);
    }
    let mut out = Chain::zero(c.dim - 1);
    let minus = ring.neg(&ring.one());
    for (p, v) in &c.terms {
        for q in 0..=p.dim() {
            let face = p.omit(q);
            if !face.is_regular() {
                continue;
            }
            if q % 2 == 0 {
                out.add_term(ring, face, v);
            } else {
                out.add_term(ring, face, &ring.mul(&minus, v));
            }
        }
    }
    out
}

/// Ω_n data in one dimension.
#[derive(Clone, Debug)]
pub struct OmegaLevel<E> {
    /// `P_n` in lexicographic order; the coordinate basis of `basis`.
    pub allowed: Vec<ElementaryPath>,
    /// Columns span Ω_n, in `allowed` coordinates.
    pub basis: SparseMatrix<E>,
    /// D_n from Ω_n-basis coordinates to Ω_{n−1}-basis coordinates.
    pub boundary: SparseMatrix<E>,
    pub admissible: BTreeSet<ElementaryPath>,
}

impl<E: Clone + PartialEq> OmegaLevel<E> {
    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }
}

#[derive(Clone, Debug)]
pub struct OmegaComplex<R: Ring> {
    ring: R,
    levels: Vec<OmegaLevel<R::Elem>>,
    complete: bool,
}

impl<R: Ring> OmegaComplex<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ring_spec(&self) -> RingSpec {
        self.ring.spec()
    }

    pub fn top_dim(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &OmegaLevel<R::Elem> {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[OmegaLevel<R::Elem>] {
        &self.levels
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(OmegaLevel::rank).collect()
    }

    /// True when `P_{top+1}` is empty, so the top degree is not truncated.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn chain_complex(&self) -> ChainComplex<R::Elem> {
        ChainComplex { boundaries: self.levels.iter().map(|l| l.boundary.clone()).collect(), complete: self.complete }
    }

    /// The k-th Ω_n basis vector as a chain.
    pub fn basis_chain(&self, n: usize, k: usize) -> Chain<R::Elem> {
        let l = &self.levels[n];
        Chain { dim: n, terms: l.basis.column(k).iter().map(|(i, v)| (l.allowed[*i].clone(), v.clone())).collect() }
    }
}

/// Paths with a nonzero row in the Ω_n basis.
pub fn admissible_paths<R: Ring>(oc: &OmegaComplex<R>, n: usize) -> &BTreeSet<ElementaryPath> {
    &oc.levels[n].admissible
}

/// Regular-boundary matrix of `P_n`, split into allowed rows (indexed like
/// `P_{n−1}`) and forbidden rows (faces outside `P_{n−1}`, sorted).
pub struct SplitBoundary<E> {
    pub allowed: SparseMatrix<E>,
    pub forbidden: SparseMatrix<E>,
    pub forbidden_faces: Vec<ElementaryPath>,
}

pub fn split_boundary<R: Ring>(ring: &R, paths: &[ElementaryPath], lower: &[ElementaryPath]) -> SplitBoundary<R::Elem> {
    let lower_idx: HashMap<&ElementaryPath, usize> = lower.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut forbidden_set: BTreeSet<ElementaryPath> = BTreeSet::new();
    for p in paths {
        for q in 0..=p.dim() {
            let f = p.omit(q);
            if f.is_regular() && !lower_idx.contains_key(&f) {
                forbidden_set.insert(f);
            }
        }
    }
    let forbidden_faces: Vec<ElementaryPath> = forbidden_set.into_iter().collect();
    let forb_idx: HashMap<&ElementaryPath, usize> = forbidden_faces.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut a = Vec::new();
    let mut f = Vec::new();
    for (j, p) in paths.iter().enumerate() {
        for q in 0..=p.dim() {
            let face = p.omit(q);
            if !face.is_regular() {
                continue;
            }
            let sign = if q % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) };
            match lower_idx.get(&face) {
                Some(&i) => a.push((i, j, sign)),
                None => f.push((forb_idx[&face], j, sign)),
            }
        }
    }
    SplitBoundary {
        allowed: SparseMatrix::from_triplets(ring, lower.len(), paths.len(), a),
        forbidden: SparseMatrix::from_triplets(ring, forbidden_faces.len(), paths.len(), f),
        forbidden_faces,
    }
}

/// Builds Ω_0 … Ω_{top_dim} and the boundary matrices between them.
pub fn build_omega<R: Euclidean>(ring: &R, pc: &PathComplex, top_dim: usize) -> Result<OmegaComplex<R>> {
    pc.ensure_regular_valid()?;
    let mut levels: Vec<OmegaLevel<R::Elem>> = Vec::with_capacity(top_dim + 1);
    let p0: Vec<ElementaryPath> = pc.paths(0).iter().cloned().collect();
    levels.push(OmegaLevel {
        basis: SparseMatrix::identity(ring, p0.len()),
        boundary: SparseMatrix::zeros(0, p0.len()),
        admissible: p0.iter().cloned().collect(),
        allowed: p0,
    });
    let mut lower_solver = SpanSolver::new(ring, &levels[0].basis)?;

    for n in 1..=top_dim {
        let allowed: Vec<ElementaryPath> = pc.paths(n).iter().cloned().collect();
        let split = split_boundary(ring, &allowed, &levels[n - 1].allowed);
        let basis = kernel_basis(ring, &split.forbidden);
        let mut cols: Vec<SparseVec<R::Elem>> = Vec::with_capacity(basis.ncols());
        for k in 0..basis.ncols() {
            let image = split.allowed.mul_vec(ring, basis.column(k));
            let coords = lower_solver
                .solve(&image)
                .map_err(|_| Error::InternalInconsistency(format!("boundary of an Ω_{n} basis vector is not in Ω_{}", n - 1)))?;
            cols.push(coords);
        }
        let boundary = SparseMatrix::from_columns(levels[n - 1].rank(), cols);
        let nonzero = basis.nonzero_rows();
        let admissible = allowed.iter().zip(&nonzero).filter(|(_, nz)| **nz).map(|(p, _)| p.clone()).collect();
        if n < top_dim {
            lower_solver = SpanSolver::new(ring, &basis)?;
        }
        levels.push(OmegaLevel { allowed, basis, boundary, admissible });
    }
    let complete = pc.paths(top_dim + 1).is_empty();
    Ok(OmegaComplex { ring: ring.clone(), levels, complete })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::linalg::{Integers, PrimeField};
    use crate::model::{path_complex_of_digraph, Digraph, VertexSet};

    fn p(v: &[usize]) -> ElementaryPath {
        ElementaryPath(v.to_vec())
    }

    fn digraph(n: usize, edges: &[(usize, usize)]) -> PathComplex {
        let g = Digraph::from_edges(VertexSet::numbered(n), edges.iter().copied()).unwrap();
        path_complex_of_digraph(&g, n).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let z = Integers;
        let b = regular_boundary(&z, &Chain::basis(&z, p(&[0, 1, 2])));
        let expect: BTreeMap<_, _> =
            [(p(&[1, 2]), BigInt::from(1)), (p(&[0, 2]), BigInt::from(-1)), (p(&[0, 1]), BigInt::from(1))].into();
        assert_eq!(b.terms, expect);
        let b = regular_boundary(&z, &Chain::basis(&z, p(&[0, 1, 0])));
        let expect: BTreeMap<_, _> = [(p(&[1, 0]), BigInt::from(1)), (p(&[0, 1]), BigInt::from(1))].into();
        assert_eq!(b.terms, expect);
        let bb = regular_boundary(&z, &regular_boundary(&z, &Chain::basis(&z, p(&[0, 1, 2, 3]))));
        assert!(bb.is_zero());
    }

    #[test]
    fn triangle_with_chord() {
        let pc = digraph(3, &[(0, 1), (1, 2), (0, 2)]);
        let oc = build_omega(&Integers, &pc, 2).unwrap();
        assert_eq!(oc.ranks(), vec![3, 3, 1]);
        assert_eq!(admissible_paths(&oc, 2), &BTreeSet::from([p(&[0, 1, 2])]));
        assert!(oc.is_complete());
    }

    #[test]
    fn three_cycle_has_no_two_chains() {
        let pc = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let oc = build_omega(&Integers, &pc, 2).unwrap();
        assert_eq!(oc.ranks(), vec![3, 3, 0]);
        assert!(admissible_paths(&oc, 2).is_empty());
        assert!(!oc.is_complete());
    }

    #[test]
    fn low_dimensions_are_everything() {
        let pc = digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let oc = build_omega(&PrimeField::new(3).unwrap(), &pc, 2).unwrap();
        assert_eq!(oc.level(0).boundary.nrows(), 0);
        assert_eq!(admissible_paths(&oc, 0).len(), 4);
        assert_eq!(admissible_paths(&oc, 1).len(), 5);
    }

    #[test]
    fn square_is_filled_by_a_difference() {
        let pc = digraph(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]);
        let oc = build_omega(&Integers, &pc, 2).unwrap();
        assert_eq!(oc.level(2).rank(), 1);
        let w = oc.basis_chain(2, 0);
        assert_eq!(w.terms.len(), 2);
        let dw = regular_boundary(&Integers, &w);
        assert!(dw.support().all(|f| pc.contains(f)));
    }
}
