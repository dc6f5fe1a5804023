//! Property tests for the structural invariants.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use pathhom::hochschild::{center_dimension, hochschild_boundary, hochschild_coboundary};
use pathhom::io::{emit_digraph, emit_path_complex, emit_simplicial, parse_digraph, parse_path_complex, parse_simplicial};
use pathhom::linalg::{kernel_basis, rank, smith_normal_form, solve_in_span};
use pathhom::product::cross_product_chains;
use pathhom::random::random_small_digraph;
use pathhom::realization::check_f_delta;
use pathhom::{
    build_a_s, build_omega, build_realization, cellular_chain_complex, cubical_digraph, homology_of_complex,
    path_complex_of_digraph, path_homology, regular_boundary, verify_realization_isomorphism, Chain, ComparisonReport,
    ElementaryPath, Execution, Integers, PrimeField, Rationals, Ring, RingSpec, SimplicialComplex, SparseMatrix, VertexSet,
};
use proptest::prelude::*;

fn regular_path(dim: usize, alphabet: usize) -> impl Strategy<Value = ElementaryPath> {
    (0..alphabet, proptest::collection::vec(1..alphabet, dim)).prop_map(move |(start, steps)| {
        let mut v = vec![start];
        for s in steps {
            let last = *v.last().unwrap();
            v.push((last + s) % alphabet);
        }
        ElementaryPath(v)
    })
}

fn path_pair() -> impl Strategy<Value = (ElementaryPath, ElementaryPath)> {
    (0usize..=5).prop_flat_map(|total| (0..=total).prop_flat_map(move |m| (regular_path(m, 3), regular_path(total - m, 3))))
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
}

fn simplicial() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(proptest::collection::btree_set(0usize..4, 1..=3), 1..=4).prop_map(|facets| {
        let facets: Vec<Vec<usize>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
        let used: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let relabel: Vec<usize> = (0..4).map(|v| used.iter().filter(|&&u| u < v).count()).collect();
        let facets: Vec<Vec<usize>> = facets.into_iter().map(|f| f.into_iter().map(|v| relabel[v]).collect()).collect();
        SimplicialComplex::from_facets(VertexSet::numbered(used.len()), facets).unwrap()
    })
}

fn z_chain(p: &ElementaryPath) -> Chain<BigInt> {
    Chain::basis(&Integers, p.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omega_boundary_squares_to_zero(seed in 0u64..10_000) {
        let pc = path_complex_of_digraph(&random_small_digraph(seed, 6, 0.35), 4).unwrap();
        let oc = build_omega(&Integers, &pc, 4).unwrap();
        prop_assert!(oc.chain_complex().check_exact(&Integers).is_ok());
        let cc = build_realization(&pc, &oc);
        prop_assert!(cellular_chain_complex(&Integers, &cc).check_exact(&Integers).is_ok());
    }

    #[test]
    fn omega_basis_has_allowed_boundary(seed in 0u64..10_000, p in prop::sample::select(vec![2u64, 3, 5])) {
        let pc = path_complex_of_digraph(&random_small_digraph(seed, 5, 0.4), 3).unwrap();
        let f = PrimeField::new(p).unwrap();
        let oc = build_omega(&f, &pc, 3).unwrap();
        for n in 1..=oc.top_dim() {
            for k in 0..oc.level(n).rank() {
                let c = oc.basis_chain(n, k);
                prop_assert!(c.support().all(|e| pc.contains(e)));
                let d = regular_boundary(&f, &c);
                prop_assert!(d.support().all(|e| pc.contains(e)));
            }
        }
    }

    #[test]
    fn cross_product_boundary_law((ex, ey) in path_pair()) {
        let z = Integers;
        let (m, ny) = (ex.dim(), 3);
        let lhs = regular_boundary(&z, &cross_product_chains(&z, &z_chain(&ex), &z_chain(&ey), ny));
        let mut rhs = Chain::zero(lhs.dim);
        rhs.add_scaled(&z, &z.one(), &cross_product_chains(&z, &regular_boundary(&z, &z_chain(&ex)), &z_chain(&ey), ny));
        let sign = z.from_i64(if m % 2 == 0 { 1 } else { -1 });
        rhs.add_scaled(&z, &sign, &cross_product_chains(&z, &z_chain(&ex), &regular_boundary(&z, &z_chain(&ey)), ny));
        prop_assert_eq!(lhs.terms, rhs.terms);
    }

    #[test]
    fn kernel_is_saturated(rows in int_matrix(), coeffs in proptest::collection::vec(-5i64..=5, 6)) {
        let z = Integers;
        let m = SparseMatrix::from_i64_rows(&z, &rows);
        let k = kernel_basis(&z, &m);
        prop_assert!(m.mul(&z, &k).unwrap().is_zero());
        prop_assert_eq!(k.ncols(), m.ncols() - rank(&Rationals, &m.to_ring(&Rationals)));
        let c: Vec<(usize, BigInt)> =
            coeffs.iter().take(k.ncols()).enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, BigInt::from(*x))).collect();
        let w = k.mul_vec(&z, &c);
        let g = w.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
        prop_assume!(!g.is_zero());
        let primitive: Vec<(usize, BigInt)> = w.iter().map(|(i, x)| (*i, x / &g)).collect();
        prop_assert!(solve_in_span(&z, &k, &primitive).is_ok(), "primitive kernel vector outside the lattice");
    }

    #[test]
    fn smith_factors_divide_and_match_rank(rows in int_matrix()) {
        let m = SparseMatrix::from_i64_rows(&Integers, &rows);
        let s = smith_normal_form(&Integers, &m);
        prop_assert_eq!(s.rank, rank(&Rationals, &m.to_ring(&Rationals)));
        prop_assert_eq!(s.invariant_factors.len(), s.rank);
        for w in s.invariant_factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(s.invariant_factors.iter().all(|d| d.is_positive()));
        prop_assert_eq!(s.torsion().len(), s.invariant_factors.iter().filter(|d| !d.is_one()).count());
    }

    #[test]
    fn sequential_and_parallel_agree(seed in 0u64..10_000) {
        let pc = path_complex_of_digraph(&random_small_digraph(seed, 6, 0.35), 4).unwrap();
        let a = path_homology(&pc, RingSpec::Integers, 3, Execution::Sequential).unwrap();
        let b = path_homology(&pc, RingSpec::Integers, 3, Execution::Parallel).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn io_round_trips(seed in 0u64..10_000) {
        let g = random_small_digraph(seed, 6, 0.35);
        let text = emit_digraph(&g);
        prop_assert_eq!(parse_digraph(&text).unwrap(), g.clone());
        let pc = path_complex_of_digraph(&g, 3).unwrap();
        let json = emit_path_complex(&pc);
        let back = parse_path_complex(&json).unwrap();
        prop_assert_eq!(emit_path_complex(&back), json);
        prop_assert_eq!(back.counts(), pc.counts());
    }

    #[test]
    fn simplicial_round_trip(s in simplicial()) {
        let json = emit_simplicial(&s);
        let back = parse_simplicial(&json).unwrap();
        prop_assert_eq!(back.counts(), s.counts());
        prop_assert_eq!(emit_simplicial(&back), json);
    }

    #[test]
    fn hochschild_differentials_square_to_zero(s in simplicial()) {
        let a = build_a_s(&s);
        prop_assume!(a.dim() <= 12);
        let q = Rationals;
        for n in 1..=2 {
            let d_hi = hochschild_boundary(&q, &a, n + 1, Execution::Sequential);
            let d_lo = hochschild_boundary(&q, &a, n, Execution::Sequential);
            prop_assert!(d_lo.mul(&q, &d_hi).unwrap().is_zero(), "d_{}·d_{} ≠ 0", n, n + 1);
        }
        for n in 0..=1 {
            let lo = hochschild_coboundary(&q, &a, n, Execution::Sequential);
            let hi = hochschild_coboundary(&q, &a, n + 1, Execution::Sequential);
            prop_assert!(hi.mul(&q, &lo).unwrap().is_zero(), "δ^{}·δ^{} ≠ 0", n + 1, n);
        }
    }

    #[test]
    fn center_counts_components(s in simplicial()) {
        let a = build_a_s(&s);
        prop_assert!(a.associativity_failures().is_empty());
        prop_assert!(a.unit_holds());
        prop_assert_eq!(center_dimension(&Rationals, &a), s.components());
    }

    #[test]
    fn cubical_route_matches_simplicial(s in simplicial()) {
        let top = s.dim().unwrap();
        let pc = path_complex_of_digraph(&cubical_digraph(&s), top + 2).unwrap();
        let (h, _) = path_homology(&pc, RingSpec::Integers, top + 1, Execution::Sequential).unwrap();
        let simp = homology_of_complex(&Integers, &s.chain_complex(&Integers)).unwrap();
        for n in 0..=top {
            prop_assert_eq!(h.group(n), simp.group(n), "degree {}", n);
        }
        prop_assert!(h.group(top + 1).is_trivial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn realization_isomorphism_on_random_digraphs(seed in 0u64..100_000, ring in prop::sample::select(vec![
        RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(2), RingSpec::PrimeField(3),
    ])) {
        let pc = path_complex_of_digraph(&random_small_digraph(seed, 6, 0.3), 4).unwrap();
        let report = verify_realization_isomorphism(&pc, ring, 3).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn f_delta_is_an_injective_chain_map(seed in 0u64..100_000) {
        let pc = path_complex_of_digraph(&random_small_digraph(seed, 6, 0.3), 4).unwrap();
        let oc = build_omega(&Integers, &pc, 3).unwrap();
        let cc = build_realization(&pc, &oc);
        let mut report = ComparisonReport::new("F_Δ", RingSpec::Integers);
        check_f_delta(&Integers, &cc, &oc, &mut report);
        prop_assert!(report.passed(), "{}", report);
    }
}
