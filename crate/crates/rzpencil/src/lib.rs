//! Real zero polynomials, monic hermitian matrix pencils, determinantal
//! representations of their powers, size reductions, and obstruction
//! certificates for nonexistence.
//!
//! The crate is organized around the pipeline:
//!
//! * [`polynomial`] — sparse exact polynomial arithmetic and parsing;
//! * [`realzero`] — real-rootedness, the real zero property, rigidly convex
//!   membership, quadratic form extraction;
//! * [`pencil`] — monic hermitian/symmetric linear matrix polynomials,
//!   symbolic determinants, identity verification, spectrahedron membership;
//! * [`reduction`] — kernel and cone size reductions, rank profiles;
//! * [`clifford`] — Brauer–Weyl generators, determinantal representations of
//!   powers of quadratic real zero polynomials, unitary equivalence testing;
//! * [`obstruction`] — dimension bounds and nonexistence certificates;
//! * [`interface`] — text file formats, the built-in example registry, and
//!   transcripts backing the command line tool.

pub mod error;
pub mod tol;
pub mod scalar;
pub mod polynomial;
pub mod sampling;
pub mod linalg;
pub mod modular;
pub mod realzero;
pub mod pencil;
pub mod reduction;
pub mod clifford;
pub mod obstruction;
pub mod interface;

pub use error::{Error, Result};
pub use polynomial::{parse, Monomial, Poly, UniPoly};
pub use scalar::{CCoeff, Coeff, Domain};

/// Default seed for every sampling routine; override per call or through the
/// `RZPENCIL_SEED` environment variable in the CLI.
pub const DEFAULT_SEED: u64 = 0x525a_5045_4e43_494c; // "RZPENCIL"
