//! Exact-arithmetic toolkit for n-complements of log surface pairs.
//!
//! The crate is organized around one question: given a log pair with
//! standard-form boundary data, for which small n does an n-complement
//! exist, and what do the associated invariants (discrepancies, minimal
//! log discrepancies, singularity types, dual complexes) look like?
//!
//! * [`arith`]: validated boundary multiplicities and the rounding maps
//!   the complement criteria are built from.
//! * [`curve`]: per-curve complement criteria for irreducible curves,
//!   chains, and wheels, plus projective-space and orbit-invariant checks.
//! * [`enumerate`]: exhaustive multiplier tables: which boundary
//!   denominators are compatible with each regular complement index.
//! * [`graph`]: weighted dual graphs of SNC configurations: crepant
//!   discrepancies, contractibility, log-canonicity, mld, δ, ADE types.
//! * [`fiber`]: models of degenerate genus-one fibers and their induced
//!   boundary data on the base.
//! * [`label`]: type labels for log del Pezzo / fiber-space
//!   classifications and golden configuration checks.
//! * [`simplicial`]: small Δ-complexes: Euler characteristics,
//!   pseudo-manifold checks, barycentric subdivision.

pub mod arith;
pub mod curve;
pub mod enumerate;
pub mod error;
pub mod fiber;
pub mod graph;
pub mod label;
pub mod simplicial;

pub use arith::{floor_shift, is_standard, satisfies_m, IndexSet, Multiplicity, Rational};
pub use error::SurfError;
