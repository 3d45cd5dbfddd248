//! Exact symbolic computation for quantum spheres, quantum real projective
//! spaces, and the principal comodule algebras built on top of them.
//!
//! The crate is organised in layers:
//!
//! * [`ncalg`] — Laurent-polynomial scalars, noncommutative polynomials,
//!   finitely presented *-algebras with oriented rewrite rules, exact linear
//!   algebra, algebra morphisms, and an empirical confluence probe.
//! * [`hopf`] — tensor elements over several presentations, Hopf structure
//!   data (coproduct, counit, antipode) and convolution algebra of linear
//!   maps out of a Hopf algebra.
//! * [`comod`] — comodule algebras: coactions, coinvariants, cotensor
//!   products and the untwisting isomorphism for commutative structure
//!   algebras.
//! * [`principal`] — strong connections, cleaving maps, crossed products,
//!   the induced smash actions, centraliser maps, and non-cleftness
//!   evidence.
//! * [`repr`] — bounded-cutoff Fock representations of the prolongated
//!   algebras with exact-coefficient residual checks.
//! * [`fredholm`] — the associated even Fredholm modules and their traces.
//!
//! The `qpb` binary exposes the same functionality as a command line
//! verification tool producing deterministic JSON reports.

pub mod comod;
pub mod expr;
pub mod fredholm;
pub mod hopf;
pub mod ncalg;
pub mod principal;
pub mod report;
pub mod repr;
pub mod suites;

pub use ncalg::scalar::LaurentScalar;
pub use ncalg::poly::NCPoly;
pub use ncalg::presentation::Presentation;
pub use ncalg::word::{Gen, Word};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("rewrite step budget exceeded in `{0}` (mis-oriented rule set?)")]
    RewriteBudget(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
