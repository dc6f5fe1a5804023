//! Homology and cohomology of finite free chain complexes, and arithmetic on
//! finitely generated abelian groups.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, Euclidean, Ring, RingSpec, SmithForm, SparseMatrix};
use crate::model::PathComplex;
use crate::omega::build_omega;
use crate::par::Execution;

/// `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | … | d_k` and every `d_i ≥ 2`.
/// Over a field only `rank` is used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(d: u64) -> Self {
        Self::new(0, vec![d])
    }

    /// Normalizes arbitrary cyclic orders into invariant-factor form.
    /// An order of 0 counts as a free summand.
    pub fn new(rank: usize, orders: Vec<u64>) -> Self {
        let mut rank = rank;
        let mut f: Vec<u64> = Vec::new();
        for d in orders {
            match d {
                0 => rank += 1,
                1 => {}
                d => f.push(d),
            }
        }
        let n = f.len();
        for i in 0..n {
            for j in i + 1..n {
                let g = f[i].gcd(&f[j]);
                let l = f[i] / g * f[j];
                f[i] = g;
                f[j] = l;
            }
        }
        f.retain(|&d| d != 1);
        FgAbelianGroup { rank, torsion: f }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Cyclic orders with free summands as 0.
    fn orders(&self) -> Vec<u64> {
        std::iter::repeat_n(0, self.rank).chain(self.torsion.iter().copied()).collect()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut t = self.torsion.clone();
        t.extend(&other.torsion);
        Self::new(self.rank + other.rank, t)
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a Self>) -> Self {
        groups.into_iter().fold(Self::zero(), |acc, g| acc.direct_sum(g))
    }

    /// Z/a ⊗ Z/b = Z/gcd(a, b) with Z = Z/0.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut orders = Vec::new();
        for a in self.orders() {
            for b in other.orders() {
                orders.push(a.gcd(&b));
            }
        }
        Self::new(0, orders)
    }

    /// Tor(Z/a, Z/b) = Z/gcd(a, b); free summands contribute nothing.
    pub fn tor(&self, other: &Self) -> Self {
        let mut orders = Vec::new();
        for &a in &self.torsion {
            for &b in &other.torsion {
                orders.push(a.gcd(&b));
            }
        }
        Self::new(0, orders)
    }

    pub fn hom_to_z(&self) -> Self {
        Self::free(self.rank)
    }

    pub fn ext_to_z(&self) -> Self {
        Self::new(0, self.torsion.clone())
    }

    /// Dimension of `self ⊗ Z_p`.
    pub fn dim_mod_p(&self, p: u64) -> usize {
        self.rank + self.torsion.iter().filter(|&&d| d % p == 0).count()
    }

    /// Text form over a ring: `Z^2 ⊕ Z/2` over Z, `Q^2` over a field.
    pub fn display_over(&self, ring: RingSpec) -> String {
        let sym = ring.symbol();
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(sym),
            r => parts.push(format!("{sym}^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_over(RingSpec::Integers))
    }
}

/// Boundary matrices `D_0 … D_top` with `D_n : C_n → C_{n−1}`; `D_0` has no
/// rows. `complete` means `D_{top+1}` is known to be zero.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<E> {
    pub boundaries: Vec<SparseMatrix<E>>,
    pub complete: bool,
}

impl<E: Clone + PartialEq> ChainComplex<E> {
    pub fn top_dim(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.boundaries.iter().map(SparseMatrix::ncols).collect()
    }

    pub fn map_into<S: Ring>(&self, target: &S, f: impl Fn(&E) -> S::Elem + Copy) -> ChainComplex<S::Elem> {
        ChainComplex { boundaries: self.boundaries.iter().map(|d| d.map_into(target, f)).collect(), complete: self.complete }
    }

    /// Checks `D_n · D_{n+1} = 0` for every stored pair.
    pub fn check_exact<R: Ring<Elem = E>>(&self, ring: &R) -> Result<()> {
        for n in 1..self.boundaries.len() {
            let lo = &self.boundaries[n - 1];
            let hi = &self.boundaries[n];
            if lo.ncols() != hi.nrows() {
                return Err(Error::InternalInconsistency(format!("D_{} and D_{n} do not compose", n - 1)));
            }
            if !lo.mul(ring, hi)?.is_zero() {
                return Err(Error::ComplexNotExact(n - 1));
            }
        }
        Ok(())
    }

    /// The dual complex: `δ^n = D_{n+1}^T`, stored so that entry `n` is
    /// `δ^{n−1} : C^{n−1} → C^n` (entry 0 has no rows, like `D_0`).
    pub fn dual(&self) -> Vec<SparseMatrix<E>> {
        let mut out = vec![SparseMatrix::zeros(0, self.boundaries[0].ncols())];
        out.extend(self.boundaries[1..].iter().map(SparseMatrix::transpose));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variance {
    Homology,
    Cohomology,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub ring: RingSpec,
    pub variance: Variance,
    pub groups: Vec<FgAbelianGroup>,
    pub truncated_at: Option<usize>,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    /// Degrees whose value does not depend on the truncation.
    pub fn exact_degrees(&self) -> usize {
        self.truncated_at.unwrap_or(self.groups.len())
    }

    pub fn group(&self, n: usize) -> FgAbelianGroup {
        self.groups.get(n).cloned().unwrap_or_default()
    }

    pub fn symbol(&self) -> &'static str {
        match self.variance {
            Variance::Homology => "H_",
            Variance::Cohomology => "H^",
        }
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(n, g)| {
                let flag = if self.truncated_at == Some(n) { " (truncated)" } else { "" };
                format!("{}{n} = {}{flag}", self.symbol(), g.display_over(self.ring))
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

fn smith_forms<R: Euclidean>(ring: &R, mats: &[SparseMatrix<R::Elem>], exec: Execution) -> Vec<SmithForm> {
    exec.map(mats, |m| smith_normal_form(ring, m))
}

fn torsion_u64(s: &SmithForm) -> Result<Vec<u64>> {
    s.torsion()
        .iter()
        .map(|d| d.to_u64().ok_or_else(|| Error::Unsupported(format!("invariant factor {d} exceeds u64"))))
        .collect()
}

/// `H_n = ker D_n / im D_{n+1}` for `0 ≤ n ≤ top`. Without `complete` the top
/// degree reports cycles only and is flagged truncated.
pub fn homology_of_complex<R: Euclidean>(ring: &R, cc: &ChainComplex<R::Elem>) -> Result<HomologyResult> {
    homology_of_complex_with(ring, cc, Execution::default())
}

pub fn homology_of_complex_with<R: Euclidean>(ring: &R, cc: &ChainComplex<R::Elem>, exec: Execution) -> Result<HomologyResult> {
    cc.check_exact(ring)?;
    let snf = smith_forms(ring, &cc.boundaries, exec);
    let top = cc.top_dim();
    let mut groups = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let c = cc.boundaries[n].ncols();
        let r_out = snf[n].rank;
        let (r_in, torsion) = match snf.get(n + 1) {
            Some(s) if ring.spec() == RingSpec::Integers => (s.rank, torsion_u64(s)?),
            Some(s) => (s.rank, Vec::new()),
            None => (0, Vec::new()),
        };
        groups.push(FgAbelianGroup::new(c - r_out - r_in, torsion));
    }
    Ok(HomologyResult { ring: ring.spec(), variance: Variance::Homology, groups, truncated_at: (!cc.complete).then_some(top) })
}

/// Cohomology of `Hom(C_*, R)`, computed on the transposed matrices.
pub fn cohomology_of_complex<R: Euclidean>(ring: &R, cc: &ChainComplex<R::Elem>) -> Result<HomologyResult> {
    cohomology_of_complex_with(ring, cc, Execution::default())
}

pub fn cohomology_of_complex_with<R: Euclidean>(ring: &R, cc: &ChainComplex<R::Elem>, exec: Execution) -> Result<HomologyResult> {
    cc.check_exact(ring)?;
    let delta = cc.dual();
    let snf = smith_forms(ring, &delta, exec);
    let top = cc.top_dim();
    let mut groups = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let c = cc.boundaries[n].ncols();
        // δ^n = delta[n + 1]; δ^{n−1} = delta[n].
        let r_out = snf.get(n + 1).map_or(0, |s| s.rank);
        let r_in = snf[n].rank;
        let torsion = if ring.spec() == RingSpec::Integers { torsion_u64(&snf[n])? } else { Vec::new() };
        groups.push(FgAbelianGroup::new(c - r_out - r_in, torsion));
    }
    Ok(HomologyResult { ring: ring.spec(), variance: Variance::Cohomology, groups, truncated_at: (!cc.complete).then_some(top) })
}

/// Integral cohomology predicted from integral homology by universal
/// coefficients: `H^n ≅ Hom(H_n, Z) ⊕ Ext(H_{n−1}, Z)`.
pub fn universal_coefficients(h: &HomologyResult) -> Vec<FgAbelianGroup> {
    (0..h.groups.len())
        .map(|n| {
            let ext = if n == 0 { FgAbelianGroup::zero() } else { h.groups[n - 1].ext_to_z() };
            h.groups[n].hom_to_z().direct_sum(&ext)
        })
        .collect()
}

/// Path homology and cohomology of `pc` in degrees `0..=min(top_dim, max_dim)`.
/// Ω is built one degree higher so every reported degree is exact.
pub fn path_homology(
    pc: &PathComplex,
    ring: RingSpec,
    top_dim: usize,
    exec: Execution,
) -> Result<(HomologyResult, HomologyResult)> {
    let top = top_dim.min(pc.max_dim());
    let build_to = (top + 1).min(pc.max_dim());
    let (mut h, mut c) = crate::with_ring!(ring, |r| {
        let cc = build_omega(&r, pc, build_to)?.chain_complex();
        let (h, c) = exec.join(|| homology_of_complex_with(&r, &cc, exec), || cohomology_of_complex_with(&r, &cc, exec));
        (h?, c?)
    });
    for res in [&mut h, &mut c] {
        res.groups.truncate(top + 1);
        if res.truncated_at.is_some_and(|t| t > top) {
            res.truncated_at = None;
        }
    }
    Ok((h, c))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::linalg::{Integers, PrimeField, Rationals};

    fn z(rows: &[Vec<i64>], ncols: usize) -> SparseMatrix<BigInt> {
        if rows.is_empty() {
            return SparseMatrix::zeros(0, ncols);
        }
        SparseMatrix::from_i64_rows(&Integers, rows)
    }

    fn circle() -> ChainComplex<BigInt> {
        // Three vertices, three edges 01, 12, 20.
        let d1 = z(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]], 3);
        ChainComplex { boundaries: vec![z(&[], 3), d1, SparseMatrix::zeros(3, 0)], complete: true }
    }

    fn rp2_like() -> ChainComplex<BigInt> {
        // One vertex, one loop, one disk attached by degree 2.
        let d1 = SparseMatrix::zeros(1, 1);
        let d2 = z(&[vec![2]], 1);
        ChainComplex { boundaries: vec![z(&[], 1), d1, d2], complete: true }
    }

    #[test]
    fn point_homology() {
        let cc = ChainComplex { boundaries: vec![SparseMatrix::zeros(0, 1)], complete: true };
        let h = homology_of_complex(&Integers, &cc).unwrap();
        assert_eq!(h.to_string(), "H_0 = Z");
        let c = cohomology_of_complex(&Integers, &cc).unwrap();
        assert_eq!(c.to_string(), "H^0 = Z");
    }

    #[test]
    fn circle_over_z() {
        let h = homology_of_complex(&Integers, &circle()).unwrap();
        assert_eq!(h.groups, vec![FgAbelianGroup::free(1), FgAbelianGroup::free(1), FgAbelianGroup::zero()]);
        let c = cohomology_of_complex(&Integers, &circle()).unwrap();
        assert_eq!(c.betti(), vec![1, 1, 0]);
    }

    #[test]
    fn torsion_moves_up_in_cohomology() {
        let cc = rp2_like();
        let h = homology_of_complex(&Integers, &cc).unwrap();
        assert_eq!(h.groups, vec![FgAbelianGroup::free(1), FgAbelianGroup::cyclic(2), FgAbelianGroup::zero()]);
        let c = cohomology_of_complex(&Integers, &cc).unwrap();
        assert_eq!(c.groups, universal_coefficients(&h));
        assert_eq!(c.groups[2], FgAbelianGroup::cyclic(2));
        let f2 = PrimeField::new(2).unwrap();
        let h2 = homology_of_complex(&f2, &cc.map_into(&f2, |v| f2.from_bigint(v))).unwrap();
        assert_eq!(h2.betti(), vec![1, 1, 1]);
        let q = Rationals;
        let hq = homology_of_complex(&q, &cc.map_into(&q, |v| q.from_bigint(v))).unwrap();
        assert_eq!(hq.betti(), vec![1, 0, 0]);
    }

    #[test]
    fn truncation_flag() {
        let mut cc = circle();
        cc.complete = false;
        let h = homology_of_complex(&Integers, &cc).unwrap();
        assert_eq!(h.truncated_at, Some(2));
        assert!(h.to_string().ends_with("(truncated)"));
    }

    #[test]
    fn non_exact_is_rejected() {
        let d1 = z(&[vec![1]], 1);
        let d2 = z(&[vec![1]], 1);
        let cc = ChainComplex { boundaries: vec![z(&[vec![1]], 1), d1, d2], complete: true };
        assert!(matches!(homology_of_complex(&Integers, &cc), Err(Error::ComplexNotExact(_))));
    }

    #[test]
    fn group_arithmetic_examples() {
        assert_eq!(FgAbelianGroup::free(1).tensor(&FgAbelianGroup::cyclic(6)), FgAbelianGroup::cyclic(6));
        assert_eq!(FgAbelianGroup::cyclic(4).tor(&FgAbelianGroup::cyclic(6)), FgAbelianGroup::cyclic(2));
        let g = FgAbelianGroup::new(1, vec![2]);
        assert_eq!(g.ext_to_z(), FgAbelianGroup::cyclic(2));
        assert_eq!(FgAbelianGroup::new(0, vec![4, 6]).torsion, vec![2, 12]);
        assert_eq!(g.to_string(), "Z ⊕ Z/2");
        assert_eq!(FgAbelianGroup::free(2).display_over(RingSpec::Rationals), "Q^2");
    }
}
