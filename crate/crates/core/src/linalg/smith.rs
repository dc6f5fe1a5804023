//! Smith normal form and rank.
//!
//! A sparse phase eliminates unit pivots (Markowitz-style choice to limit
//! fill). Over a field that is the whole job; over Z the residual block, whose
//! entries are all non-units, goes through a dense Smith reduction with
//! smallest-magnitude pivoting.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Euclidean, SparseMatrix};

/// Invariant factors `d_1 | d_2 | … | d_r`, unit factors included as 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one, i.e. the torsion the matrix contributes.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

struct Sparse<R: Euclidean> {
    rows: Vec<HashMap<usize, R::Elem>>,
    cols: Vec<BTreeSet<usize>>,
    by_count: BTreeSet<(usize, usize)>,
}

impl<R: Euclidean> Sparse<R> {
    fn new(m: &SparseMatrix<R::Elem>) -> Self {
        let mut rows = vec![HashMap::new(); m.nrows()];
        let mut cols = vec![BTreeSet::new(); m.ncols()];
        for (j, col) in m.columns().iter().enumerate() {
            for (i, v) in col {
                rows[*i].insert(j, v.clone());
                cols[j].insert(*i);
            }
        }
        let by_count = cols.iter().enumerate().filter(|(_, c)| !c.is_empty()).map(|(j, c)| (c.len(), j)).collect();
        Sparse { rows, cols, by_count }
    }

    fn set_col_membership(&mut self, j: usize, i: usize, present: bool) {
        let before = self.cols[j].len();
        let changed = if present { self.cols[j].insert(i) } else { self.cols[j].remove(&i) };
        if changed {
            self.by_count.remove(&(before, j));
            let after = self.cols[j].len();
            if after > 0 {
                self.by_count.insert((after, j));
            }
        }
    }

    /// Unit pivot with small (row count − 1)(column count − 1), scanning a
    /// bounded window of columns in increasing count order.
    fn pick_unit(&self, ring: &R) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        let mut scanned_since_found = 0;
        for &(ccount, j) in &self.by_count {
            if best.is_some() {
                scanned_since_found += 1;
                if scanned_since_found > 32 {
                    break;
                }
            }
            for &i in &self.cols[j] {
                if ring.is_unit(&self.rows[i][&j]) {
                    let cost = (self.rows[i].len() - 1) * (ccount - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, i, j));
                        if cost == 0 {
                            return Some((i, j));
                        }
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn eliminate(&mut self, ring: &R, pr: usize, pc: usize) {
        let pivot_row = std::mem::take(&mut self.rows[pr]);
        let inv = ring.quotient(&ring.one(), &pivot_row[&pc]);
        let targets: Vec<usize> = self.cols[pc].iter().copied().filter(|&i| i != pr).collect();
        for i in targets {
            let a = self.rows[i].remove(&pc).expect("column index consistent");
            let f = ring.neg(&ring.mul(&a, &inv));
            for (&j, v) in &pivot_row {
                if j == pc {
                    continue;
                }
                let entry = self.rows[i].remove(&j);
                let new = match entry {
                    Some(old) => ring.add_mul(&old, &f, v),
                    None => ring.mul(&f, v),
                };
                if ring.is_zero(&new) {
                    self.set_col_membership(j, i, false);
                } else {
                    self.rows[i].insert(j, new);
                    self.set_col_membership(j, i, true);
                }
            }
        }
        for &j in pivot_row.keys() {
            self.set_col_membership(j, pr, false);
        }
        let rest: Vec<usize> = self.cols[pc].iter().copied().collect();
        for i in rest {
            self.set_col_membership(pc, i, false);
        }
    }
}

/// Smith normal form over the ring. Over a field every factor is 1 and the
/// result carries only the rank.
pub fn smith_normal_form<R: Euclidean>(ring: &R, m: &SparseMatrix<R::Elem>) -> SmithForm {
    let mut s = Sparse::<R>::new(m);
    let mut units = 0usize;
    while let Some((i, j)) = s.pick_unit(ring) {
        s.eliminate(ring, i, j);
        units += 1;
    }

    let live_rows: Vec<usize> = (0..s.rows.len()).filter(|&i| !s.rows[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..s.cols.len()).filter(|&j| !s.cols[j].is_empty()).collect();
    let mut factors = vec![BigInt::one(); units];
    if !live_rows.is_empty() {
        let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
        for (r, &i) in live_rows.iter().enumerate() {
            for (j, v) in &s.rows[i] {
                // Non-unit entries only survive over Z.
                dense[r][col_pos[j]] = ring.integer_value(v).expect("residual block is integral");
            }
        }
        factors.extend(dense_smith(dense));
    }
    let factors = normalize_chain(factors);
    SmithForm { rank: factors.len(), invariant_factors: factors }
}

/// Rank over the ring (equivalently over its fraction field).
pub fn rank<R: Euclidean>(ring: &R, m: &SparseMatrix<R::Elem>) -> usize {
    smith_normal_form(ring, m).rank
}

fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero magnitude in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (upper, lower) = a.split_at_mut(i);
                for (x, p) in lower[0][t..].iter_mut().zip(&upper[t][t..]) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().take(rows).skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                move_smallest_to_pivot(&mut a, t);
                continue;
            }
            // Divisibility fix-up: fold an offending row into the pivot row.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    let (upper, lower) = a.split_at_mut(i);
                    for (x, v) in upper[t][t..].iter_mut().zip(&lower[0][t..]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

fn move_smallest_to_pivot(a: &mut [Vec<BigInt>], t: usize) {
    let rows = a.len();
    let cols = a[0].len();
    let mut best = (t, t);
    for i in t..rows {
        for j in t..cols {
            if (i == t || j == t) && !a[i][j].is_zero() {
                let (bi, bj) = best;
                if a[bi][bj].is_zero() || a[i][j].magnitude() < a[bi][bj].magnitude() {
                    best = (i, j);
                }
            }
        }
    }
    a.swap(t, best.0);
    for row in a.iter_mut() {
        row.swap(t, best.1);
    }
}

/// Restores the divisibility chain with pairwise (gcd, lcm) steps.
fn normalize_chain(mut f: Vec<BigInt>) -> Vec<BigInt> {
    f.retain(|d| !d.is_zero());
    for d in f.iter_mut() {
        *d = d.abs();
    }
    let n = f.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = f[i].gcd(&f[j]);
            let l = f[i].lcm(&f[j]);
            f[i] = g;
            f[j] = l;
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Integers, PrimeField, Rationals};

    fn snf(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = SparseMatrix::from_i64_rows(&Integers, rows);
        smith_normal_form(&Integers, &m).invariant_factors.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(snf(&[vec![2, 0], vec![0, 6]]), vec![2, 6]);
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn restores_divisibility() {
        assert_eq!(snf(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
        assert_eq!(snf(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]), vec![1, 1, 6]);
    }

    #[test]
    fn mixes_units_and_residual() {
        assert_eq!(snf(&[vec![1, 1, 0], vec![1, -1, 0], vec![0, 0, 4]]), vec![1, 2, 4]);
    }

    #[test]
    fn field_ranks() {
        let rows = vec![vec![1, 1], vec![1, -1]];
        let q = Rationals;
        assert_eq!(rank(&q, &SparseMatrix::from_i64_rows(&q, &rows)), 2);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank(&f2, &SparseMatrix::from_i64_rows(&f2, &rows)), 1);
    }
}
