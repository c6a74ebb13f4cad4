//! Machine-readable verification reports: one envelope shared by every
//! subcommand, with command echo, input digest, the tolerance set in force,
//! a pass/fail flag and command-specific results.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{MetricLieAlgebra, SymmetricOperator};
use crate::harmonic::{self, StructureReport};
use crate::io::{self, JsonScalar, ScalarValue};
use crate::linalg::Matrix;
use crate::probe::{Classification, ProbeConfig, ProbeResult};
use crate::scalar::{Rat, Scalar};
use crate::tol;

#[derive(Clone, Debug, Serialize)]
pub struct Tolerances {
    pub defect: f64,
    pub parallel: f64,
    pub divergence: f64,
    pub structure: f64,
    pub eig_cluster_rel: f64,
    pub jacobi: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            defect: tol::DEFECT,
            parallel: tol::PARALLEL,
            divergence: tol::DIVERGENCE,
            structure: tol::STRUCTURE,
            eig_cluster_rel: tol::EIG_CLUSTER_REL,
            jacobi: tol::JACOBI,
        }
    }
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub tolerances: Tolerances,
    pub pass: bool,
    pub results: T,
}

impl<T: Serialize> Report<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }
}

#[derive(Serialize)]
pub struct CheckResults {
    pub field: &'static str,
    pub dim: usize,
    pub jacobi_defect: f64,
    pub jacobi_ok: bool,
    /// Codazzi defect norm of the checked operator (the Ricci operator
    /// unless a tensor file was supplied).
    pub codazzi_defect_norm: f64,
    pub codazzi_max_entry: f64,
    pub harmonic: bool,
    pub nabla_norm: f64,
    pub parallel: bool,
    pub divergence_norm: f64,
    pub divergence_free: bool,
    /// Codazzi/divergence agreement (both observed zero or both nonzero).
    pub equivalence_consistent: bool,
    pub scalar_curvature: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure_error: Option<String>,
    pub structure_consistent: bool,
}

/// Full harmonicity check of one metric algebra with an optional candidate
/// tensor. Pass means: valid Lie algebra and the operator is Codazzi.
pub fn run_check<S: JsonScalar>(
    alg: crate::LieAlgebra<S>,
    gram: Option<Matrix<S>>,
    tensor: Option<Matrix<S>>,
    tols: &Tolerances,
) -> Result<(CheckResults, bool)> {
    let dim = alg.dim();
    let jacobi = alg.jacobi_defect();
    let jacobi_ok = crate::scalar::approx_zero(&jacobi, tols.jacobi);
    let gram = gram.unwrap_or_else(|| Matrix::identity(dim));
    let m = MetricLieAlgebra::new(alg, gram)?;
    let t = match tensor {
        Some(mat) => SymmetricOperator::new(mat, &m)?,
        None => m.ricci(),
    };
    let defect = m.codazzi_defect(&t);
    let harmonic = defect.is_zero(tols.defect);
    let nabla_sq = m.nabla_norm_sq(&t);
    let nabla = nabla_sq.to_f64().max(0.0).sqrt();
    let parallel = if S::EXACT {
        nabla_sq.is_zero()
    } else {
        nabla <= tols.parallel
    };
    let div_sq = m.curvature_divergence_norm_sq();
    let div = div_sq.to_f64().max(0.0).sqrt();
    let divergence_free = if S::EXACT {
        div_sq.is_zero()
    } else {
        div <= tols.divergence
    };
    // the divergence always refers to the Ricci operator
    let ric = m.ricci();
    let ric_defect = m.codazzi_defect(&ric);
    let equivalence_consistent = ric_defect.is_zero(tol::DEFECT_STRICT) == divergence_free;

    let (structure, structure_error, structure_consistent) =
        match harmonic::decompose(&m, &t, tols.eig_cluster_rel) {
            Ok(dec) => match harmonic::verify_structure(&m, &dec, tols.structure) {
                Ok(rep) => {
                    let consistent = rep.pass == harmonic;
                    (Some(rep), None, consistent)
                }
                Err(e) => (None, Some(e.to_string()), false),
            },
            Err(e) => (None, Some(e.to_string()), false),
        };

    let results = CheckResults {
        field: S::FIELD,
        dim,
        jacobi_defect: jacobi.to_f64(),
        jacobi_ok,
        codazzi_defect_norm: defect.norm(),
        codazzi_max_entry: defect.max_entry,
        harmonic,
        nabla_norm: nabla,
        parallel,
        divergence_norm: div,
        divergence_free,
        equivalence_consistent,
        scalar_curvature: m.scalar_curvature().to_f64(),
        structure,
        structure_error,
        structure_consistent,
    };
    let pass = jacobi_ok && harmonic;
    Ok((results, pass))
}

#[derive(Serialize)]
pub struct EigenspaceOut {
    pub eigenvalue: ScalarValue,
    pub multiplicity: usize,
    pub basis: Vec<Vec<ScalarValue>>,
}

#[derive(Serialize)]
pub struct DecomposeResults {
    pub field: &'static str,
    pub dim: usize,
    pub count: usize,
    pub eigenspaces: Vec<EigenspaceOut>,
}

pub fn run_decompose<S: JsonScalar>(
    alg: crate::LieAlgebra<S>,
    gram: Option<Matrix<S>>,
    tensor: Option<Matrix<S>>,
    tol_eig: f64,
) -> Result<(DecomposeResults, bool)> {
    let dim = alg.dim();
    let gram = gram.unwrap_or_else(|| Matrix::identity(dim));
    let m = MetricLieAlgebra::new(alg, gram)?;
    let t = match tensor {
        Some(mat) => SymmetricOperator::new(mat, &m)?,
        None => m.ricci(),
    };
    let dec = harmonic::decompose(&m, &t, tol_eig)?;
    let eigenspaces = dec
        .eigenvalues()
        .iter()
        .zip(dec.eigenspaces())
        .map(|(lambda, space)| EigenspaceOut {
            eigenvalue: lambda.to_value(),
            multiplicity: space.dim(),
            basis: space
                .basis()
                .iter()
                .map(|v| v.iter().map(|x| x.to_value()).collect())
                .collect(),
        })
        .collect();
    Ok((
        DecomposeResults {
            field: S::FIELD,
            dim,
            count: dec.count(),
            eigenspaces,
        },
        true,
    ))
}

#[derive(Serialize)]
pub struct ReproduceResults {
    pub lambda: Vec<ScalarValue>,
    pub mu: ScalarValue,
    pub jacobi_defect_zero: bool,
    pub codazzi_defect_zero: bool,
    pub codazzi_defect_norm_sq: ScalarValue,
    pub nabla_norm_positive: bool,
    pub nabla_norm_sq: ScalarValue,
    pub no_eigenspace_is_ideal: bool,
    pub eigenspace_ideal_flags: Vec<bool>,
    pub eigenspace_subalgebra_flags: Vec<bool>,
    pub killing_negative_definite: bool,
    /// Signed leading principal minors of the Killing form.
    pub killing_leading_minors: Vec<ScalarValue>,
    pub structure_pass: bool,
    pub witness_found: bool,
}

/// Builds the essential-Codazzi example in exact arithmetic and certifies
/// its five guarantees: Jacobi holds, the diagonal tensor is Codazzi, it is
/// not parallel, no eigenspace is an ideal, and the Killing form is negative
/// definite.
pub fn run_reproduce(lambda: [Rat; 4], mu: Rat) -> Result<(ReproduceResults, bool)> {
    let (m, a) = crate::catalog::essential_codazzi_example(lambda.clone(), mu.clone())?;
    let jacobi = m.algebra().jacobi_defect();
    let defect = m.codazzi_defect(&a);
    let nabla_sq = m.nabla_norm_sq(&a);

    let dec = harmonic::decompose(&m, &a, tol::EIG_CLUSTER_REL)?;
    let structure = harmonic::verify_structure(&m, &dec, tol::STRUCTURE)?;
    let witness = harmonic::nonparallel_witness(&m, &dec, tol::STRUCTURE);

    let mut ideal_flags = Vec::new();
    let mut subalgebra_flags = Vec::new();
    for space in dec.eigenspaces() {
        ideal_flags.push(m.algebra().is_ideal(space)?);
        subalgebra_flags.push(m.algebra().is_subalgebra(space)?);
    }

    let killing = m.algebra().killing_form();
    let mut minors = Vec::new();
    let mut negative_definite = true;
    for k in 1..=m.dim() {
        let minor = Matrix::from_fn(k, k, |i, j| killing[(i, j)].clone()).determinant();
        // negative definite: minors alternate sign starting negative
        let expected_positive = k % 2 == 0;
        let sign_ok = if expected_positive {
            minor > Rat::zero()
        } else {
            minor < Rat::zero()
        };
        negative_definite = negative_definite && sign_ok;
        minors.push(minor.to_value());
    }

    let results = ReproduceResults {
        lambda: lambda.iter().map(|x| x.to_value()).collect(),
        mu: mu.to_value(),
        jacobi_defect_zero: jacobi.is_zero(),
        codazzi_defect_zero: defect.norm_sq.is_zero(),
        codazzi_defect_norm_sq: defect.norm_sq.to_value(),
        nabla_norm_positive: !nabla_sq.is_zero(),
        nabla_norm_sq: nabla_sq.to_value(),
        no_eigenspace_is_ideal: ideal_flags.iter().all(|x| !x),
        eigenspace_ideal_flags: ideal_flags,
        eigenspace_subalgebra_flags: subalgebra_flags,
        killing_negative_definite: negative_definite,
        killing_leading_minors: minors,
        structure_pass: structure.pass,
        witness_found: witness.is_some(),
    };
    let pass = results.jacobi_defect_zero
        && results.codazzi_defect_zero
        && results.nabla_norm_positive
        && results.no_eigenspace_is_ideal
        && results.killing_negative_definite;
    Ok((results, pass))
}

#[derive(Serialize)]
pub struct ProbeReport {
    pub config: ProbeConfig,
    #[serde(flatten)]
    pub result: ProbeResult,
}

pub fn run_probe(
    alg: &crate::LieAlgebra<f64>,
    config: &ProbeConfig,
) -> Result<(ProbeReport, bool)> {
    let result = crate::probe::minimize(alg, config)?;
    let pass = result.classification != Classification::HarmonicNonparallelCandidate;
    Ok((
        ProbeReport {
            config: config.clone(),
            result,
        },
        pass,
    ))
}

#[derive(Serialize)]
pub struct CatalogListResults {
    pub names: Vec<&'static str>,
}

pub fn run_catalog_list() -> CatalogListResults {
    CatalogListResults {
        names: crate::catalog::NAMED.to_vec(),
    }
}

/// Builds a catalog algebra and returns its file form.
pub fn run_catalog_build(
    name: &str,
    n: Option<usize>,
    field: &str,
) -> Result<io::AlgebraFile> {
    match field {
        "rational" => {
            let m = crate::catalog::named::<Rat>(name, n)?;
            Ok(io::algebra_to_file(m.algebra()))
        }
        "float" => {
            let m = crate::catalog::named::<f64>(name, n)?;
            Ok(io::algebra_to_file(m.algebra()))
        }
        other => Err(Error::InvalidInput(format!(
            "field must be \"rational\" or \"float\", got `{other}`"
        ))),
    }
}
