//! Brute-force Ω oracle shared by the oracle and acceptance suites.

use std::collections::{BTreeSet, HashMap};

use pathhom::random::{random_regular_path, rng};
use pathhom::{build_omega, ElementaryPath, PathComplex, PrimeField, VertexSet};
use rand::Rng;

pub const MAX_PATHS: usize = 12;

/// Regular faces of `p` that are not in `lower`, with their signs.
fn forbidden_faces(p: &[usize], lower: &BTreeSet<ElementaryPath>) -> Vec<(ElementaryPath, i64)> {
    let mut out = Vec::new();
    for q in 0..p.len() {
        let mut f = p.to_vec();
        f.remove(q);
        if f.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let f = ElementaryPath(f);
        if !lower.contains(&f) {
            out.push((f, if q % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// Number of `v ∈ Z_p^{P_n}` with `∂v` allowed, by enumerating every vector.
fn brute_force_count(p: u64, paths: &[ElementaryPath], lower: &BTreeSet<ElementaryPath>) -> u64 {
    let mut index: HashMap<ElementaryPath, usize> = HashMap::new();
    let cols: Vec<Vec<(usize, u64)>> = paths
        .iter()
        .map(|e| {
            forbidden_faces(&e.0, lower)
                .into_iter()
                .map(|(f, s)| {
                    let k = index.len();
                    let i = *index.entry(f).or_insert(k);
                    (i, s.rem_euclid(p as i64) as u64)
                })
                .collect()
        })
        .collect();
    let mut acc = vec![0u64; index.len()];
    let mut nonzero = 0usize;
    let mut digits = vec![0u64; paths.len()];
    let mut count = 1u64;
    'outer: loop {
        for (i, d) in digits.iter_mut().enumerate() {
            for &(r, s) in &cols[i] {
                let was = acc[r] != 0;
                acc[r] = (acc[r] + s) % p;
                nonzero = nonzero + usize::from(acc[r] != 0) - usize::from(was);
            }
            *d += 1;
            if *d < p {
                count += u64::from(nonzero == 0);
                continue 'outer;
            }
            *d = 0;
        }
        return count;
    }
}

fn in_oracle_span(p: u64, level: &[ElementaryPath], col: &[(usize, u64)], lower: &BTreeSet<ElementaryPath>) -> bool {
    let mut acc: HashMap<ElementaryPath, u64> = HashMap::new();
    for (i, c) in col {
        for (f, s) in forbidden_faces(&level[*i].0, lower) {
            let e = acc.entry(f).or_default();
            *e = (*e + c * s.rem_euclid(p as i64) as u64) % p;
        }
    }
    acc.values().all(|v| *v == 0)
}

pub fn random_closed_complex(seed: u64) -> PathComplex {
    let mut r = rng(seed);
    let alphabet = r.gen_range(2..=4);
    let mut pc = PathComplex::new(VertexSet::numbered(alphabet), true);
    for _ in 0..r.gen_range(1..=5) {
        let dim = r.gen_range(1..=3);
        pc.insert(random_regular_path(&mut r, dim, alphabet));
    }
    pc.close_under_truncation();
    pc
}

/// Compares Ω_n over Z_p with exhaustive enumeration in every dimension with
/// at most [`MAX_PATHS`] paths. Returns the number of dimensions checked.
pub fn check_omega_oracle(pc: &PathComplex, p: u64) -> Result<usize, String> {
    let f = PrimeField::new(p).unwrap();
    let top = pc.max_dim().min(3);
    let oc = build_omega(&f, pc, top).unwrap();
    let mut checked = 0;
    for n in 1..=top {
        let level = oc.level(n);
        if level.allowed.len() > MAX_PATHS {
            continue;
        }
        let lower = pc.paths(n - 1);
        let total = brute_force_count(p, &level.allowed, lower);
        if total != p.pow(level.rank() as u32) {
            return Err(format!("|Ω_{n}| over Z_{p}: {total} vectors, rank {} ({:?})", level.rank(), pc.counts()));
        }
        if !level.basis.columns().iter().all(|col| in_oracle_span(p, &level.allowed, col, lower)) {
            return Err(format!("Ω_{n} basis vector over Z_{p} has a forbidden boundary ({:?})", pc.counts()));
        }
        checked += 1;
    }
    Ok(checked)
}
