//! Exact-arithmetic library for finite-dimensional Hopf algebras given by
//! structure constants, and for their actions on finitely presented
//! commutative algebras.
//!
//! The main pipelines:
//! - build or load a Hopf algebra and verify all axioms exactly
//!   ([`hopf::verify_hopf_axioms`]);
//! - structural analysis: group-like elements, left integrals,
//!   semisimplicity, the coradical filtration, Hopf ideals and quotients
//!   ([`structure`]);
//! - module-algebra actions on `k[y_1..y_s]/(relations)`: verification,
//!   invariant subalgebras, trace images, integrality witnesses and the
//!   positive-characteristic Frobenius chain ([`action`]);
//! - ready-made models: Taft algebras, group algebras and a nilpotent
//!   counterexample action ([`models`]).
//!
//! All arithmetic is exact (arbitrary-precision rationals, prime fields,
//! cyclotomic fields); there are no tolerances anywhere.

// Structure-constant arithmetic reads clearest with explicit indices into
// the (j, k) -> j*n + k tensor layout.
#![allow(clippy::needless_range_loop)]

pub mod action;
pub mod commalg;
pub mod error;
pub mod field;
pub mod hopf;
pub mod linalg;
pub mod models;
pub mod schema;
pub mod solver;
pub mod structure;
pub mod unipoly;

pub use action::{ActionSpec, IntegralityWitness, WitnessOutcome};
pub use commalg::{FPCommAlgebra, Monomial, Poly, TermOrder};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use hopf::{HopfAlgebraData, TensorSquare, VerifiedHopf};
pub use linalg::{Matrix, Subspace};
pub use unipoly::UniPoly;
