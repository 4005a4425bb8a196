//! Exact computation of chromatic quasisymmetric polynomials of unit interval graphs, their
//! Schur expansions, and cell-count checks on the associated convolution varieties.
//!
//! ```
//! use hesscsp::{compute_csp, schur_expand, verify_kato, ReverseHessenberg};
//!
//! let r: ReverseHessenberg = "0,0,1".parse().unwrap();
//! let csp = compute_csp(&r, 3, false);
//! let schur = schur_expand(&csp);
//! assert!(verify_kato(&csp, &schur).pass);
//! ```

pub mod cli;
pub mod colourings;
pub mod csp;
pub mod error;
pub mod geometry;
pub mod hessenberg;
pub mod partitions;
pub mod qpoly;

pub use colourings::{
    colouring_count, enumerate_colourings, fixed_point_chain, is_proper, stats, Colouring,
    ColouringStats,
};
pub use csp::{
    compute_csp, schur_expand, symmetry_check, verify_kato, CsPoly, CspReport, SchurExpansion,
    VerificationReport,
};
pub use error::{Error, Result};
pub use geometry::{
    dimension, exponent_identity_check, fibre_dimension, poincare_bb, poincare_product,
    GeometryReport,
};
pub use hessenberg::{all_reverse_hessenberg, Graph, ReverseHessenberg};
pub use partitions::{
    dominates, kostka, kostka_table, partitions_of, KostkaTable, Partition, WeightVector,
};
pub use qpoly::{q_factorial, q_integer, QPoly};
