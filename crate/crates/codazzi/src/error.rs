use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("structure constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("inner product is not symmetric")]
    GramNotSymmetric,

    #[error("inner product is not positive definite")]
    NotPositiveDefinite,

    #[error("operator is not self-adjoint with respect to the inner product")]
    NotSelfAdjoint,

    #[error("matrix is singular")]
    Singular,

    #[error("eigenvalue clustering is ambiguous near gap {gap:.3e} (tolerance {tol:.3e})")]
    ClusteringAmbiguous { gap: f64, tol: f64 },

    #[error("could not recover exact eigenvalues; decompose in float mode instead")]
    ExactEigenFailed,

    #[error("decomposition is stale: eigenvector residual {residual:.3e} exceeds tolerance")]
    StaleDecomposition { residual: f64 },

    #[error("subspace is not closed under the bracket (residual {residual:.3e})")]
    NotClosed { residual: f64 },

    #[error("vector is not orthogonal to the derived subalgebra")]
    NotOrthogonalToDerived,

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("Jacobi identity fails (defect {defect:.3e}); input is not a Lie algebra")]
    NotLieAlgebra { defect: f64 },

    #[error("eigenvalue parameters must be pairwise distinct")]
    CoincidentEigenvalues,

    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(&'static str),

    #[error("non-finite parameter value")]
    NonFiniteParameter,

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("catalog entry `{0}` requires a dimension argument")]
    MissingDimension(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
