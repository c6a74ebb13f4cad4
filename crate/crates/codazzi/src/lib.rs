//! Left-invariant Riemannian geometry of metric Lie algebras.
//!
//! A Lie algebra with a positive-definite inner product determines the
//! geometry of the corresponding Lie group with left-invariant metric. This
//! crate computes that geometry — Levi-Civita product, curvature, Ricci
//! operator — and checks the structural conditions under which the Ricci
//! operator is a Codazzi tensor (equivalently, the curvature is
//! divergence-free). It ships a six-dimensional compact algebra carrying a
//! non-parallel Codazzi tensor whose eigenspace subalgebras are not ideals,
//! verified in exact rational arithmetic, and a multi-start optimizer that
//! searches the space of left-invariant metrics for harmonic-curvature
//! metrics and classifies what it finds.
//!
//! Two scalar modes run through everything: exact rationals (`Rat`) for
//! certification and `f64` for optimization and random sweeps. See the
//! `examples/` directory for one runnable walkthrough per capability, and the
//! `codazzi` binary for the JSON-reporting command line.

// index-chasing loops over small matrices read better than iterator chains
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod geometry;
pub mod harmonic;
pub mod io;
pub mod linalg;
pub mod probe;
pub mod report;
pub mod scalar;
pub mod tol;

pub use algebra::LieAlgebra;
pub use error::{Error, Result};
pub use geometry::{CodazziDefect, MetricLieAlgebra, SymmetricOperator};
pub use harmonic::{RicciDecomposition, StandardnessReport, StructureReport};
pub use linalg::{Matrix, Subspace};
pub use probe::{Classification, ProbeConfig, ProbeResult};
pub use scalar::{Rat, Scalar};
