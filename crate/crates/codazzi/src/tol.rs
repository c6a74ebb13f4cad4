//! Default tolerances for float-mode verification.
//!
//! Exact (rational) mode never consults these: a residual either vanishes or
//! it does not. Float mode needs thresholds, and every threshold used by the
//! library or the CLI is defined here rather than inline.

/// Codazzi defect norm below which a metric counts as harmonic.
pub const DEFECT: f64 = 1e-9;

/// Stricter defect threshold used on the Codazzi side of the
/// divergence/Codazzi equivalence check.
pub const DEFECT_STRICT: f64 = 1e-10;

/// Divergence norm below which the curvature counts as divergence-free.
pub const DIVERGENCE: f64 = 1e-9;

/// `∇T` norm below which an operator counts as parallel.
pub const PARALLEL: f64 = 1e-6;

/// Residual threshold for the eigenspace structure conditions.
pub const STRUCTURE: f64 = 1e-9;

/// Relative gap below which two Ricci eigenvalues belong to one cluster.
pub const EIG_CLUSTER_REL: f64 = 1e-7;

/// Eigenvector residual `‖T v − λ v‖` accepted when re-validating a
/// decomposition.
pub const EIG_RESIDUAL: f64 = 1e-9;

/// Relative singular-value cutoff for rank decisions.
pub const RANK_REL: f64 = 1e-10;

/// Relative residual for float-mode subspace membership tests.
pub const MEMBERSHIP: f64 = 1e-8;

/// Smallest eigenvalue a float Gram matrix may have.
pub const POS_DEF_MIN: f64 = 1e-12;

/// Asymmetry allowed in a float Gram matrix or self-adjointness check,
/// relative to the largest entry.
pub const SELF_ADJOINT: f64 = 1e-10;

/// Jacobi defect allowed before an input is rejected as not a Lie algebra.
pub const JACOBI: f64 = 1e-8;

/// Agreement required between the trace-based and structure-formula Ricci.
pub const RICCI_DUAL_PATH: f64 = 1e-10;

/// Residual allowed in the eigenspace restriction identities.
pub const RESTRICTION: f64 = 1e-10;

/// Bracket norm below which the orthogonal complement of the derived
/// subalgebra counts as abelian.
pub const ABELIAN: f64 = 1e-10;

/// Residual allowed in the mean-curvature constant cross-check.
pub const C_CROSSCHECK: f64 = 1e-9;

/// Relative agreement required between the finite-difference gradient and a
/// directional secant.
pub const GRADIENT_REL: f64 = 1e-4;
