//! Column echelon and Hermite forms by unimodular column operations.
//!
//! Over Z the transform is unimodular, so the columns of the transform that
//! map to zero form a basis of the full integer kernel lattice. That lattice is
//! automatically saturated.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::{axpy, Euclidean, LinalgError, SparseMatrix, SparseVec};

/// `reduced = m · transform`. The first `rank` columns of `reduced` are in
/// echelon form with strictly increasing pivot rows; the rest are zero.
#[derive(Clone, Debug)]
pub struct ColumnEchelon<E> {
    pub reduced: SparseMatrix<E>,
    pub transform: Option<SparseMatrix<E>>,
    pub pivots: Vec<usize>,
}

impl<E> ColumnEchelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

struct Work<'a, R: Euclidean> {
    ring: &'a R,
    cols: Vec<SparseVec<R::Elem>>,
    trans: Option<Vec<SparseVec<R::Elem>>>,
}

impl<R: Euclidean> Work<'_, R> {
    fn lead(&self, j: usize) -> Option<&(usize, R::Elem)> {
        self.cols[j].first()
    }

    /// col[dst] += c * col[src], on both halves.
    fn add_multiple(&mut self, dst: usize, c: &R::Elem, src: usize) {
        let v = axpy(self.ring, &self.cols[dst], c, &self.cols[src]);
        self.cols[dst] = v;
        if let Some(t) = self.trans.as_mut() {
            let v = axpy(self.ring, &t[dst], c, &t[src]);
            t[dst] = v;
        }
    }

    fn scale(&mut self, j: usize, u: &R::Elem) {
        let ring = self.ring;
        for (_, v) in self.cols[j].iter_mut() {
            *v = ring.mul(v, u);
        }
        if let Some(t) = self.trans.as_mut() {
            for (_, v) in t[j].iter_mut() {
                *v = ring.mul(v, u);
            }
        }
    }

    fn entry(&self, r: usize, j: usize) -> Option<&R::Elem> {
        let col = &self.cols[j];
        col.binary_search_by_key(&r, |e| e.0).ok().map(|i| &col[i].1)
    }
}

/// Column echelon form. With `hermite`, pivots are normalized and entries to
/// the left of each pivot are reduced, which makes the column space basis
/// canonical (Hermite normal form over Z, reduced echelon form over a field).
pub fn column_echelon<R: Euclidean>(ring: &R, m: &SparseMatrix<R::Elem>, track: bool, hermite: bool) -> ColumnEchelon<R::Elem> {
    let n = m.ncols();
    let mut w = Work { ring, cols: m.columns().to_vec(), trans: track.then(|| SparseMatrix::identity(ring, n).into_columns()) };

    let mut by_lead: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut zero_cols = Vec::new();
    for j in 0..n {
        match w.lead(j) {
            Some((r, _)) => by_lead.entry(*r).or_default().push(j),
            None => zero_cols.push(j),
        }
    }

    let mut pivot_cols = Vec::new();
    let mut pivots = Vec::new();
    while let Some((row, mut group)) = by_lead.pop_first() {
        // Euclidean reduction among the columns sharing this leading row.
        while group.len() > 1 {
            let p = *group
                .iter()
                .min_by(|&&a, &&b| {
                    let ea = &w.lead(a).unwrap().1;
                    let eb = &w.lead(b).unwrap().1;
                    ring.cmp_size(ea, eb).then_with(|| w.cols[a].len().cmp(&w.cols[b].len())).then(a.cmp(&b))
                })
                .unwrap();
            let mut keep = vec![p];
            for &c in &group {
                if c == p {
                    continue;
                }
                let q = ring.quotient(&w.lead(c).unwrap().1, &w.lead(p).unwrap().1);
                w.add_multiple(c, &ring.neg(&q), p);
                match w.lead(c) {
                    Some((r, _)) if *r == row => keep.push(c),
                    Some((r, _)) => by_lead.entry(*r).or_default().push(c),
                    None => zero_cols.push(c),
                }
            }
            group = keep;
        }
        pivot_cols.push(group[0]);
        pivots.push(row);
    }

    if hermite {
        for k in 0..pivot_cols.len() {
            let pj = pivot_cols[k];
            let u = ring.normalizing_unit(&w.lead(pj).unwrap().1);
            w.scale(pj, &u);
            let pivot_val = w.lead(pj).unwrap().1.clone();
            for &pi in &pivot_cols[..k] {
                if let Some(v) = w.entry(pivots[k], pi) {
                    let q = ring.canonical_quotient(v, &pivot_val);
                    if !ring.is_zero(&q) {
                        w.add_multiple(pi, &ring.neg(&q), pj);
                    }
                }
            }
        }
    }

    zero_cols.sort_unstable();
    let order: Vec<usize> = pivot_cols.iter().chain(zero_cols.iter()).copied().collect();
    let Work { cols, trans, .. } = w;
    let mut cols: Vec<Option<SparseVec<R::Elem>>> = cols.into_iter().map(Some).collect();
    let reduced = order.iter().map(|&j| cols[j].take().unwrap()).collect();
    let transform = trans.map(|t| {
        let mut t: Vec<Option<SparseVec<R::Elem>>> = t.into_iter().map(Some).collect();
        SparseMatrix::from_columns(n, order.iter().map(|&j| t[j].take().unwrap()).collect())
    });
    ColumnEchelon { reduced: SparseMatrix::from_columns(m.nrows(), reduced), transform, pivots }
}

/// Basis of `{x : m x = 0}` as columns. Over Z this is a basis of the integer
/// kernel lattice, returned in Hermite normal form.
pub fn kernel_basis<R: Euclidean>(ring: &R, m: &SparseMatrix<R::Elem>) -> SparseMatrix<R::Elem> {
    let ech = column_echelon(ring, m, true, false);
    let rank = ech.rank();
    let t = ech.transform.expect("transform tracked");
    let kernel_idx: Vec<usize> = (rank..m.ncols()).collect();
    let raw = t.select_columns(&kernel_idx);
    column_echelon(ring, &raw, false, true).reduced
}

/// Expresses vectors in a fixed basis with linearly independent columns.
#[derive(Clone, Debug)]
pub struct SpanSolver<R: Euclidean> {
    ring: R,
    ech: ColumnEchelon<R::Elem>,
}

impl<R: Euclidean> SpanSolver<R> {
    pub fn new(ring: &R, basis: &SparseMatrix<R::Elem>) -> Result<Self, LinalgError> {
        let ech = column_echelon(ring, basis, true, false);
        if ech.rank() != basis.ncols() {
            return Err(LinalgError::DependentBasis);
        }
        Ok(SpanSolver { ring: ring.clone(), ech })
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    /// The unique `x` with `basis · x = target`.
    pub fn solve(&self, target: &[(usize, R::Elem)]) -> Result<SparseVec<R::Elem>, LinalgError> {
        let ring = &self.ring;
        let mut residual: SparseVec<R::Elem> = target.to_vec();
        let mut y: SparseVec<R::Elem> = Vec::new();
        for (j, &p) in self.ech.pivots.iter().enumerate() {
            let Some(first) = residual.first() else { break };
            match first.0.cmp(&p) {
                Ordering::Less => return Err(LinalgError::NotInSpan),
                Ordering::Greater => continue,
                Ordering::Equal => {}
            }
            let col = self.ech.reduced.column(j);
            let c = ring.div_exact(&first.1, &col[0].1).ok_or(LinalgError::NotInSpan)?;
            residual = axpy(ring, &residual, &ring.neg(&c), col);
            y.push((j, c));
        }
        if !residual.is_empty() {
            return Err(LinalgError::NotInSpan);
        }
        let t = self.ech.transform.as_ref().expect("transform tracked");
        Ok(t.mul_vec(ring, &y))
    }
}

/// One-shot convenience wrapper around [`SpanSolver`].
pub fn solve_in_span<R: Euclidean>(
    ring: &R,
    basis: &SparseMatrix<R::Elem>,
    target: &[(usize, R::Elem)],
) -> Result<SparseVec<R::Elem>, LinalgError> {
    SpanSolver::new(ring, basis)?.solve(target)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::linalg::{Integers, PrimeField, Rationals, Ring};

    fn z(rows: &[Vec<i64>]) -> SparseMatrix<BigInt> {
        SparseMatrix::from_i64_rows(&Integers, rows)
    }

    fn ints(v: &[i64]) -> SparseVec<BigInt> {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, BigInt::from(*x))).collect()
    }

    #[test]
    fn kernel_of_difference() {
        let k = kernel_basis(&Integers, &z(&[vec![1, -1]]));
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.column(0), ints(&[1, 1]).as_slice());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = kernel_basis(&Integers, &SparseMatrix::zeros(2, 3));
        assert_eq!(k, SparseMatrix::identity(&Integers, 3));
    }

    #[test]
    fn kernel_is_saturated() {
        let k = kernel_basis(&Integers, &z(&[vec![2, 4]]));
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.column(0), ints(&[2, -1]).as_slice());
    }

    #[test]
    fn field_kernel_is_reduced() {
        let q = Rationals;
        let m = SparseMatrix::from_i64_rows(&q, &[vec![2, 4, 6]]);
        let k = kernel_basis(&q, &m);
        assert_eq!(k.ncols(), 2);
        assert_eq!(k.column(0)[0].1, q.one());
    }

    #[test]
    fn solve_examples() {
        let b = z(&[vec![1], vec![1]]);
        assert_eq!(solve_in_span(&Integers, &b, &ints(&[3, 3])).unwrap(), ints(&[3]));
        let b = z(&[vec![2], vec![-1]]);
        assert_eq!(solve_in_span(&Integers, &b, &ints(&[1, 0])), Err(LinalgError::NotInSpan));
        let b = z(&[vec![1, 4], vec![2, -1], vec![0, 3], vec![5, 5], vec![-2, 7]]);
        let target = b.mul_vec(&Integers, &ints(&[7, -3]));
        assert_eq!(solve_in_span(&Integers, &b, &target).unwrap(), ints(&[7, -3]));
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let b = z(&[vec![1, 2], vec![1, 2]]);
        assert!(matches!(SpanSolver::new(&Integers, &b), Err(LinalgError::DependentBasis)));
    }

    #[test]
    fn echelon_rank_over_fp() {
        let f = PrimeField::new(3).unwrap();
        let m = SparseMatrix::from_i64_rows(&f, &[vec![1, 2], vec![2, 1]]);
        assert_eq!(column_echelon(&f, &m, false, false).rank(), 1);
        let ech = column_echelon(&Integers, &z(&[vec![1, 2], vec![2, 1]]), true, true);
        assert_eq!(ech.rank(), 2);
        assert_eq!(ech.reduced.get(0, 0), Some(&BigInt::from(1)));
    }
}
