//! Path homology and cohomology of regular path complexes over Z, Q and Z_p.
//!
//! The pipeline is [`model`] (paths, complexes, digraphs) → [`omega`] (the
//! chain complex Ω_*) → [`homology`] (groups). Around it sit the geometric
//! realization ([`realization`]), products and joins ([`product`]) and the
//! Hochschild comparison ([`hochschild`]).

pub mod error;
pub mod hochschild;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod model;
pub mod omega;
pub mod par;
pub mod product;
pub mod random;
pub mod realization;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use hochschild::{
    build_a_s, cubical_digraph, hochschild_cohomology, hochschild_homology, verify_hochschild_comparison, AssocAlgebra,
    SimplicialComplex,
};
pub use homology::{
    cohomology_of_complex, homology_of_complex, path_homology, ChainComplex, FgAbelianGroup, HomologyResult, Variance,
};
pub use linalg::{Euclidean, Integers, PrimeField, Rationals, Ring, RingSpec, SparseMatrix};
pub use model::{boundary_faces, path_complex_of_digraph, Digraph, ElementaryPath, PathComplex, VertexSet};
pub use omega::{admissible_paths, build_omega, regular_boundary, Chain, OmegaComplex};
pub use par::Execution;
pub use product::{cartesian_product, cross_product_paths, join, verify_kunneth, KunnethMode};
pub use realization::{build_realization, cellular_chain_complex, reduce_path, verify_realization_isomorphism, CellComplex};
pub use report::{ComparisonReport, KunnethReport};
