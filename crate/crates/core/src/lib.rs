//! Exact-arithmetic workbench for finite-dimensional Hopf algebras,
//! Yetter-Drinfeld modules and Gerstenhaber-Schack (bialgebra) cohomology.
//!
//! Everything is computed over explicit exact fields (rationals, prime
//! fields, simple extensions), so every verdict produced by this crate is a
//! proof-by-computation, not a numerical approximation.
//!
//! The main layers, bottom to top:
//!
//! * [`field`] — exact scalars and field towers,
//! * [`linalg`] — sparse exact linear algebra (rank, nullspace, subspaces),
//! * [`hopf`] — finite-dimensional Hopf algebras as structure tensors,
//!   exact sequences, and the double algebra whose modules realize
//!   Yetter-Drinfeld modules,
//! * [`yd`] — Yetter-Drinfeld modules and all constructions on them
//!   (characters, coadjoint quotients, induction/restriction, duals,
//!   the Fourier transform),
//! * [`homology`] — minimal free resolutions, Ext, Gerstenhaber-Schack
//!   cohomology and the exact-sequence verifiers,
//! * [`presented`] — degree-capped noncommutative rewriting for Hopf
//!   algebras given by generators and relations.

pub mod error;
pub mod field;
pub mod linalg;
pub mod hopf;
pub mod yd;
pub mod homology;
pub mod presented;

pub use error::Error;
pub use field::{FieldElement, FieldSpec};
pub use linalg::{SparseMatrix, Subspace};
