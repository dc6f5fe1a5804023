//! Künneth with a nonzero Tor term: two copies of the cubical RP² digraph.
//! Several seconds in release; run with `cargo test --release -- --ignored`.

use pathhom::hochschild::standard;
use pathhom::{cubical_digraph, path_complex_of_digraph, verify_kunneth, FgAbelianGroup, KunnethMode, PathComplex, RingSpec};

fn rp2(suffix: &str) -> PathComplex {
    let pc = path_complex_of_digraph(&cubical_digraph(&standard::rp2()), 4).unwrap();
    pc.relabel(|l| format!("{l}{suffix}")).unwrap()
}

fn degree_group(report: &pathhom::KunnethReport, n: usize) -> String {
    report.comparisons.iter().find(|c| c.label.starts_with("H (direct") && c.degree == n).unwrap().left.clone()
}

#[test]
#[ignore]
fn product_of_projective_planes_has_tor_in_degree_three() {
    let r = verify_kunneth(&rp2(""), &rp2("'"), RingSpec::Integers, 4, KunnethMode::Product).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(degree_group(&r, 3), FgAbelianGroup::cyclic(2).display_over(RingSpec::Integers));
}

#[test]
#[ignore]
fn join_of_projective_planes_has_tor_in_degree_four() {
    let r = verify_kunneth(&rp2(""), &rp2("'"), RingSpec::Integers, 5, KunnethMode::Join).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(degree_group(&r, 4), FgAbelianGroup::cyclic(2).display_over(RingSpec::Integers));
}
