//! Seeded random instances for the verification suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Digraph, ElementaryPath, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each ordered pair `u ≠ v` becomes an edge with probability `density`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Digraph {
    let vs = VertexSet::numbered(n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_edges(vs, edges).expect("generated edges are valid")
}

/// Random digraph with `2..=max_vertices` vertices.
pub fn random_small_digraph(seed: u64, max_vertices: usize, density: f64) -> Digraph {
    let mut r = rng(seed);
    let n = r.gen_range(2..=max_vertices.max(2));
    random_digraph(&mut r, n, density)
}

/// Regular path of dimension `dim` over `alphabet` vertices.
pub fn random_regular_path<R: Rng>(rng: &mut R, dim: usize, alphabet: usize) -> ElementaryPath {
    assert!(alphabet >= 2 || dim == 0);
    let mut v = vec![rng.gen_range(0..alphabet)];
    while v.len() <= dim {
        let last = *v.last().unwrap();
        let choices: Vec<usize> = (0..alphabet).filter(|&x| x != last).collect();
        v.push(*choices.choose(rng).unwrap());
    }
    ElementaryPath(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let a = random_small_digraph(7, 6, 0.3);
        let b = random_small_digraph(7, 6, 0.3);
        assert_eq!(a, b);
    }

    #[test]
    fn regular_paths_are_regular() {
        let mut r = rng(1);
        for d in 0..6 {
            let p = random_regular_path(&mut r, d, 3);
            assert_eq!(p.dim(), d);
            assert!(p.is_regular());
        }
    }
}
