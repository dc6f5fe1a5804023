use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{LinalgError, Ring};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c * b` on sparse vectors.
pub fn axpy<R: Ring>(ring: &R, a: &[(usize, R::Elem)], c: &R::Elem, b: &[(usize, R::Elem)]) -> SparseVec<R::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let bj = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ai < bj {
            out.push(a[i].clone());
            i += 1;
        } else if bj < ai {
            let v = ring.mul(c, &b[j].1);
            if !ring.is_zero(&v) {
                out.push((bj, v));
            }
            j += 1;
        } else {
            let v = ring.add_mul(&a[i].1, c, &b[j].1);
            if !ring.is_zero(&v) {
                out.push((ai, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    rows: usize,
    cols: Vec<SparseVec<E>>,
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    /// Builds from sorted, zero-free columns. Panics on out-of-range indices.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec<E>>) -> Self {
        for col in &cols {
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(col.last().is_none_or(|e| e.0 < rows), "row index out of range");
        }
        SparseMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, E)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<E>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec<E>> {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&E> {
        let col = &self.cols[c];
        col.binary_search_by_key(&r, |e| e.0).ok().map(|i| &col[i].1)
    }

    /// Rows holding at least one nonzero entry.
    pub fn nonzero_rows(&self) -> Vec<bool> {
        let mut seen = vec![false; self.rows];
        for col in &self.cols {
            for (r, _) in col {
                seen[*r] = true;
            }
        }
        seen
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec<E>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols.len(), cols }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        SparseMatrix { rows: self.rows, cols: idx.iter().map(|&j| self.cols[j].clone()).collect() }
    }

    /// Keeps the given rows, renumbered in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut map = vec![usize::MAX; self.rows];
        for (new, &old) in idx.iter().enumerate() {
            map[old] = new;
        }
        let cols = self
            .cols
            .iter()
            .map(|col| {
                let mut c: SparseVec<E> =
                    col.iter().filter(|(r, _)| map[*r] != usize::MAX).map(|(r, v)| (map[*r], v.clone())).collect();
                c.sort_by_key(|e| e.0);
                c
            })
            .collect();
        SparseMatrix { rows: idx.len(), cols }
    }

    pub fn to_dense(&self, zero: &E) -> Vec<Vec<E>> {
        let mut out = vec![vec![zero.clone(); self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(|i| vec![(i, ring.one())]).collect() }
    }

    /// Sums duplicate triplets; drops zeros.
    pub fn from_triplets<R: Ring<Elem = E>>(
        ring: &R,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, E)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, E>> = vec![BTreeMap::new(); cols];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet ({i}, {j}) out of range for {rows}x{cols}");
            let slot = acc[j].entry(i).or_insert_with(|| ring.zero());
            *slot = ring.add(slot, &v);
        }
        let cols = acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect()).collect();
        SparseMatrix { rows, cols }
    }

    pub fn from_dense<R: Ring<Elem = E>>(ring: &R, dense: &[Vec<E>], ncols: usize) -> Self {
        let rows = dense.len();
        let triplets = dense.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(ring, rows, ncols, triplets)
    }

    /// Integer matrix from machine integers.
    pub fn from_i64_rows<R: Ring<Elem = E>>(ring: &R, dense: &[Vec<i64>]) -> Self {
        let ncols = dense.first().map_or(0, Vec::len);
        let triplets = dense
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, *v)))
            .map(|(i, j, v)| (i, j, ring.from_i64(v)));
        Self::from_triplets(ring, dense.len(), ncols, triplets)
    }

    pub fn mul_vec<R: Ring<Elem = E>>(&self, ring: &R, x: &[(usize, E)]) -> SparseVec<E> {
        let mut acc: BTreeMap<usize, E> = BTreeMap::new();
        for (j, c) in x {
            for (i, v) in &self.cols[*j] {
                let slot = acc.entry(*i).or_insert_with(|| ring.zero());
                *slot = ring.add_mul(slot, c, v);
            }
        }
        acc.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect()
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self, LinalgError> {
        if self.ncols() != other.nrows() {
            return Err(LinalgError::Shape(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let cols = other.cols.iter().map(|x| self.mul_vec(ring, x)).collect();
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &Self) -> Self {
        assert_eq!(self.ncols(), below.ncols());
        let cols = self
            .cols
            .iter()
            .zip(&below.cols)
            .map(|(a, b)| a.iter().cloned().chain(b.iter().map(|(i, v)| (i + self.rows, v.clone()))).collect())
            .collect();
        SparseMatrix { rows: self.rows + below.rows, cols }
    }

    /// Converts every entry through `f` (e.g. Z → Z_p), dropping new zeros.
    pub fn map_into<S: Ring>(&self, target: &S, f: impl Fn(&E) -> S::Elem) -> SparseMatrix<S::Elem> {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, f(v))).filter(|(_, v)| !target.is_zero(v)).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols }
    }
}

impl SparseMatrix<BigInt> {
    /// Reduces an integer matrix into any ring.
    pub fn to_ring<S: Ring>(&self, target: &S) -> SparseMatrix<S::Elem> {
        self.map_into(target, |v| target.from_bigint(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Integers, PrimeField};

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let z = Integers;
        let m = SparseMatrix::from_triplets(&z, 2, 2, [(0, 0, 1.into()), (0, 0, (-1).into()), (1, 1, 3.into())]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), Some(&BigInt::from(3)));
    }

    #[test]
    fn product_and_transpose() {
        let z = Integers;
        let a = SparseMatrix::from_i64_rows(&z, &[vec![1, 2], vec![0, 1]]);
        let b = SparseMatrix::from_i64_rows(&z, &[vec![1, -2], vec![0, 1]]);
        assert_eq!(a.mul(&z, &b).unwrap(), SparseMatrix::identity(&z, 2));
        assert_eq!(a.transpose().get(1, 0), Some(&BigInt::from(2)));
    }

    #[test]
    fn reduction_mod_p_drops_entries() {
        let z = Integers;
        let m = SparseMatrix::from_i64_rows(&z, &[vec![2, 3]]);
        let f2 = PrimeField::new(2).unwrap();
        let r = m.to_ring(&f2);
        assert_eq!(r.nnz(), 1);
        assert_eq!(r.get(0, 1), Some(&1));
    }

    #[test]
    fn axpy_cancels() {
        let z = Integers;
        let a = vec![(0, BigInt::from(2)), (3, BigInt::from(1))];
        let b = vec![(0, BigInt::from(1)), (2, BigInt::from(5))];
        let out = axpy(&z, &a, &BigInt::from(-2), &b);
        assert_eq!(out, vec![(2, BigInt::from(-10)), (3, BigInt::from(1))]);
    }
}
