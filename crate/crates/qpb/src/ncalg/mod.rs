//! Exact noncommutative algebra: Laurent scalars, words, polynomials,
//! presented *-algebras with oriented rewrite systems, bundled algebra
//! catalog, and fraction-free linear algebra over the scalar ring.

pub mod catalog;
pub mod linalg;
pub mod morphism;
pub mod poly;
pub mod presentation;
pub mod probe;
pub mod scalar;
pub mod word;

pub use poly::NCPoly;
pub use presentation::{parse_presentation, GenInfo, HopfSpec, Presentation, RewriteRule};
pub use scalar::LaurentScalar;
pub use word::{Gen, Word};
