//! Search for harmonic-curvature metrics on a fixed Lie algebra.
//!
//! Metrics are parametrized through a Cholesky-style factor `gram = F Fᵀ`
//! with `exp`-scaled diagonal, so every parameter vector is a valid metric.
//! The objective is the squared Codazzi defect norm of the Ricci operator;
//! it vanishes exactly at harmonic metrics. Minimization is multi-start
//! gradient descent with a backtracking (Armijo) line search and central
//! finite-difference gradients; restarts draw their own seeds from the
//! config seed by index, so parallel and serial runs produce identical
//! results.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::MetricLieAlgebra;
use crate::linalg::Matrix;
use crate::tol;
use crate::LieAlgebra;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProbeConfig {
    pub seed: u64,
    pub restarts: usize,
    pub max_iters: usize,
    /// Defect norm below which a run counts as harmonic.
    pub tol_defect: f64,
    /// `∇Ric` norm below which a harmonic run counts as parallel.
    pub tol_parallel: f64,
    /// Initial line-search step.
    pub step_init: f64,
    /// Half-width of the uniform initialization box per coordinate.
    pub param_bounds: f64,
    /// Finite-difference step for the gradient.
    pub fd_step: f64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            seed: 1,
            restarts: 8,
            max_iters: 200,
            tol_defect: tol::DEFECT,
            tol_parallel: tol::PARALLEL,
            step_init: 0.25,
            param_bounds: 1.0,
            fd_step: 1e-6,
        }
    }
}

impl ProbeConfig {
    fn validate(&self) -> Result<()> {
        if self.restarts == 0
            || self.tol_defect <= 0.0
            || self.tol_parallel <= 0.0
            || self.step_init <= 0.0
            || self.fd_step <= 0.0
        {
            return Err(Error::InvalidInput(
                "probe config needs positive tolerances, steps and restarts".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "harmonic_parallel")]
    HarmonicParallel,
    #[serde(rename = "harmonic_nonparallel_CANDIDATE")]
    HarmonicNonparallelCandidate,
    #[serde(rename = "nonconverged")]
    Nonconverged,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RestartTrace {
    pub restart: usize,
    pub initial_objective: f64,
    pub final_objective: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProbeResult {
    pub best_params: Vec<f64>,
    /// Codazzi defect norm of the Ricci operator at the best metric.
    pub defect: f64,
    /// `∇Ric` norm at the best metric.
    pub parallel_norm: f64,
    pub classification: Classification,
    /// Iterations used by the best restart.
    pub iterations: usize,
    pub restarts: Vec<RestartTrace>,
}

/// Number of metric parameters for a given dimension.
pub fn param_len(dim: usize) -> usize {
    dim * (dim + 1) / 2
}

/// Gram matrix `F Fᵀ` from a parameter vector: the first `dim` entries are
/// logs of the diagonal of the lower-triangular factor `F`, the rest fill
/// the strict lower triangle row by row.
pub fn metric_from_parameters(
    alg: &LieAlgebra<f64>,
    params: &[f64],
) -> Result<MetricLieAlgebra<f64>> {
    let n = alg.dim();
    if params.len() != param_len(n) {
        return Err(Error::DimensionMismatch {
            expected: param_len(n),
            got: params.len(),
        });
    }
    if params.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFiniteParameter);
    }
    let mut f: Matrix<f64> = Matrix::zeros(n, n);
    for i in 0..n {
        f[(i, i)] = params[i].exp();
    }
    let mut idx = n;
    for i in 1..n {
        for j in 0..i {
            f[(i, j)] = params[idx];
            idx += 1;
        }
    }
    let gram = f.mul(&f.transpose());
    if gram.max_abs_f64() > 1e150 || !gram.max_abs_f64().is_finite() {
        return Err(Error::NonFiniteParameter);
    }
    MetricLieAlgebra::new(alg.clone(), gram)
}

/// Squared Codazzi defect norm of the Ricci operator at the parametrized
/// metric. Parameter vectors whose metric is numerically degenerate act as
/// an infinite barrier.
pub fn defect_objective(alg: &LieAlgebra<f64>, params: &[f64]) -> f64 {
    let Ok(m) = metric_from_parameters(alg, params) else {
        return f64::INFINITY;
    };
    let ric = m.ricci();
    let value = m.codazzi_defect(&ric).norm_sq;
    if value.is_finite() {
        value
    } else {
        f64::INFINITY
    }
}

/// Central finite-difference gradient with per-coordinate step
/// `h · max(1, |param|)`.
pub fn gradient(alg: &LieAlgebra<f64>, params: &[f64], h: f64) -> Vec<f64> {
    let mut grad = vec![0.0; params.len()];
    let mut work = params.to_vec();
    for i in 0..params.len() {
        let step = h * params[i].abs().max(1.0);
        work[i] = params[i] + step;
        let fp = defect_objective(alg, &work);
        work[i] = params[i] - step;
        let fm = defect_objective(alg, &work);
        work[i] = params[i];
        grad[i] = (fp - fm) / (2.0 * step);
    }
    grad
}

struct RestartOutcome {
    params: Vec<f64>,
    objective: f64,
    initial_objective: f64,
    iterations: usize,
    converged: bool,
}

fn run_restart(alg: &LieAlgebra<f64>, config: &ProbeConfig, restart: usize) -> RestartOutcome {
    let seed = config
        .seed
        .wrapping_add((restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = param_len(alg.dim());
    let mut params: Vec<f64> = (0..p)
        .map(|_| rng.gen_range(-config.param_bounds..=config.param_bounds))
        .collect();
    let mut f = defect_objective(alg, &params);
    let initial_objective = f;
    let tol_sq = config.tol_defect * config.tol_defect;
    let mut step = config.step_init;
    let mut iterations = 0;
    let mut converged = f < tol_sq;
    let mut history = std::collections::VecDeque::with_capacity(51);
    let mut polish_left = 50usize;
    while iterations < config.max_iters {
        if converged {
            // keep going while progress is fast, to report a sharp minimum
            if polish_left == 0 {
                break;
            }
            polish_left -= 1;
        }
        let g = gradient(alg, &params, config.fd_step);
        let gnorm_sq: f64 = g.iter().map(|x| x * x).sum();
        if gnorm_sq <= 1e-32 || !gnorm_sq.is_finite() {
            break;
        }
        // backtracking line search: halve until Armijo decrease
        let mut alpha = (step * 2.0).min(1e6);
        let mut accepted = false;
        for _ in 0..60 {
            let trial: Vec<f64> = params
                .iter()
                .zip(&g)
                .map(|(x, gi)| x - alpha * gi)
                .collect();
            if trial.iter().all(|x| x.is_finite()) {
                let ft = defect_objective(alg, &trial);
                if ft <= f - 1e-4 * alpha * gnorm_sq {
                    let progress = if f > 0.0 { ft / f } else { 0.0 };
                    params = trial;
                    f = ft;
                    step = alpha;
                    accepted = true;
                    if converged && progress > 0.5 {
                        polish_left = 0;
                    }
                    break;
                }
            }
            alpha *= 0.5;
        }
        iterations += 1;
        if !accepted {
            break;
        }
        if f < tol_sq {
            converged = true;
        }
        history.push_back(f);
        if history.len() > 50 {
            let old: f64 = history.pop_front().unwrap();
            if old > 0.0 && (old - f) / old < 1e-14 {
                break;
            }
        }
    }
    RestartOutcome {
        params,
        objective: f,
        initial_objective,
        iterations,
        converged: f < tol_sq,
    }
}

/// Multi-start defect minimization. Deterministic for a fixed
/// `(algebra, config)` pair; restarts run in parallel and merge by index.
pub fn minimize(alg: &LieAlgebra<f64>, config: &ProbeConfig) -> Result<ProbeResult> {
    config.validate()?;
    let defect = alg.jacobi_defect();
    if defect > tol::JACOBI {
        return Err(Error::NotLieAlgebra { defect });
    }
    let outcomes: Vec<RestartOutcome> = (0..config.restarts)
        .into_par_iter()
        .map(|r| run_restart(alg, config, r))
        .collect();
    let best_idx = (0..outcomes.len())
        .min_by(|&a, &b| {
            outcomes[a]
                .objective
                .partial_cmp(&outcomes[b].objective)
                .unwrap()
                .then(a.cmp(&b))
        })
        .expect("at least one restart");
    let best = &outcomes[best_idx];
    let m = metric_from_parameters(alg, &best.params)?;
    let ric = m.ricci();
    let defect_norm = m.codazzi_defect(&ric).norm();
    let parallel_norm = m.nabla_norm(&ric);
    let classification = if defect_norm < config.tol_defect {
        if parallel_norm < config.tol_parallel {
            Classification::HarmonicParallel
        } else {
            Classification::HarmonicNonparallelCandidate
        }
    } else {
        Classification::Nonconverged
    };
    Ok(ProbeResult {
        best_params: best.params.clone(),
        defect: defect_norm,
        parallel_norm,
        classification,
        iterations: best.iterations,
        restarts: outcomes
            .iter()
            .enumerate()
            .map(|(i, o)| RestartTrace {
                restart: i,
                initial_objective: o.initial_objective,
                final_objective: o.objective,
                iterations: o.iterations,
                converged: o.converged,
            })
            .collect(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepSummary {
    pub harmonic_parallel: usize,
    pub harmonic_nonparallel_candidate: usize,
    pub nonconverged: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub results: Vec<ProbeResult>,
    pub summary: SweepSummary,
}

/// Runs the probe over a list of algebras, preserving order.
pub fn sweep(algebras: &[LieAlgebra<f64>], config: &ProbeConfig) -> Result<SweepOutcome> {
    let mut results = Vec::with_capacity(algebras.len());
    for alg in algebras {
        results.push(minimize(alg, config)?);
    }
    let mut summary = SweepSummary {
        harmonic_parallel: 0,
        harmonic_nonparallel_candidate: 0,
        nonconverged: 0,
    };
    for r in &results {
        match r.classification {
            Classification::HarmonicParallel => summary.harmonic_parallel += 1,
            Classification::HarmonicNonparallelCandidate => {
                summary.harmonic_nonparallel_candidate += 1
            }
            Classification::Nonconverged => summary.nonconverged += 1,
        }
    }
    Ok(SweepOutcome { results, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn su2() -> LieAlgebra<f64> {
        catalog::named::<f64>("su2_biinvariant", None)
            .unwrap()
            .algebra()
            .clone()
    }

    #[test]
    fn identity_metric_from_zero_params() {
        let alg = LieAlgebra::<f64>::abelian(3);
        let m = metric_from_parameters(&alg, &[0.0; 6]).unwrap();
        assert_eq!(*m.gram(), Matrix::identity(3));
    }

    #[test]
    fn diagonal_params_give_diagonal_gram() {
        let alg = LieAlgebra::<f64>::abelian(2);
        let m = metric_from_parameters(&alg, &[2.0f64.ln(), 0.0, 0.0]).unwrap();
        assert!((m.gram()[(0, 0)] - 4.0).abs() < 1e-12);
        assert!((m.gram()[(1, 1)] - 1.0).abs() < 1e-12);
        assert_eq!(m.gram()[(0, 1)], 0.0);
    }

    #[test]
    fn factoring_round_trip() {
        // rebuild a random positive-definite gram from its own factorization
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let gram = catalog::random::gram(4, &mut rng);
        // Cholesky by hand
        let n = 4;
        let mut f: Matrix<f64> = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = gram[(i, j)];
                for k in 0..j {
                    s -= f[(i, k)] * f[(j, k)];
                }
                if i == j {
                    f[(i, j)] = s.sqrt();
                } else {
                    f[(i, j)] = s / f[(j, j)];
                }
            }
        }
        let mut params = vec![0.0; param_len(n)];
        for i in 0..n {
            params[i] = f[(i, i)].ln();
        }
        let mut idx = n;
        for i in 1..n {
            for j in 0..i {
                params[idx] = f[(i, j)];
                idx += 1;
            }
        }
        let alg = LieAlgebra::<f64>::abelian(n);
        let m = metric_from_parameters(&alg, &params).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert!((m.gram()[(i, j)] - gram[(i, j)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn objective_vanishes_on_abelian_and_round_su2() {
        let alg = LieAlgebra::<f64>::abelian(3);
        assert_eq!(defect_objective(&alg, &[0.3, -0.2, 0.5, 0.1, 0.0, -0.4]), 0.0);
        let su2 = su2();
        assert!(defect_objective(&su2, &[0.0; 6]) < 1e-24);
    }

    #[test]
    fn heisenberg_objective_positive_at_identity() {
        let alg = catalog::named::<f64>("heisenberg3", None)
            .unwrap()
            .algebra()
            .clone();
        // frozen exact value: squared defect norm is 3 at the identity metric
        let f = defect_objective(&alg, &[0.0; 6]);
        assert!((f - 3.0).abs() < 1e-12);
    }

    #[test]
    fn gradient_matches_directional_secant() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let alg = catalog::random::solvable_algebra(4, &mut rng);
        let p: Vec<f64> = (0..param_len(4)).map(|_| rng.gen_range(-0.5..0.5)).collect();
        let g = gradient(&alg, &p, 1e-6);
        let mut d: Vec<f64> = (0..p.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm = d.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut d {
            *x /= norm;
        }
        let t = 1e-5;
        let plus: Vec<f64> = p.iter().zip(&d).map(|(x, y)| x + t * y).collect();
        let minus: Vec<f64> = p.iter().zip(&d).map(|(x, y)| x - t * y).collect();
        let secant = (defect_objective(&alg, &plus) - defect_objective(&alg, &minus)) / (2.0 * t);
        let dot: f64 = g.iter().zip(&d).map(|(x, y)| x * y).sum();
        assert!(
            (dot - secant).abs() <= 1e-4 * secant.abs().max(1e-12),
            "dot {dot} secant {secant}"
        );
    }

    #[test]
    fn gradient_vanishes_at_stationary_minimum() {
        let su2 = su2();
        let g = gradient(&su2, &[0.0; 6], 1e-6);
        let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(norm < 1e-6, "gradient norm {norm}");
    }

    #[test]
    fn minimize_abelian_converges_immediately() {
        let alg = LieAlgebra::<f64>::abelian(4);
        let result = minimize(&alg, &ProbeConfig::default()).unwrap();
        assert_eq!(result.classification, Classification::HarmonicParallel);
        assert_eq!(result.defect, 0.0);
    }

    #[test]
    fn minimize_su2_finds_harmonic_metric() {
        let config = ProbeConfig {
            restarts: 4,
            max_iters: 400,
            ..Default::default()
        };
        let result = minimize(&su2(), &config).unwrap();
        assert!(result.defect < 1e-9, "defect {}", result.defect);
        assert!(result.parallel_norm < 1e-6);
        assert_eq!(result.classification, Classification::HarmonicParallel);
    }

    #[test]
    fn minimize_is_deterministic() {
        let config = ProbeConfig {
            restarts: 3,
            max_iters: 40,
            ..Default::default()
        };
        let alg = catalog::named::<f64>("heisenberg3", None)
            .unwrap()
            .algebra()
            .clone();
        let a = minimize(&alg, &config).unwrap();
        let b = minimize(&alg, &config).unwrap();
        assert_eq!(a.best_params, b.best_params);
        assert_eq!(a.defect, b.defect);
        assert_eq!(a.parallel_norm, b.parallel_norm);
    }

    #[test]
    fn minimize_rejects_non_lie_input() {
        let bad = LieAlgebra::<f64>::from_brackets(
            3,
            &[
                (0, 1, 2, 1.0),
                (0, 1, 0, 0.5),
                (1, 2, 0, 1.0),
                (0, 2, 1, -1.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            minimize(&bad, &ProbeConfig::default()),
            Err(Error::NotLieAlgebra { .. })
        ));
    }

    #[test]
    fn sweep_preserves_order_and_duplicates_agree() {
        let alg = su2();
        let config = ProbeConfig {
            restarts: 2,
            max_iters: 60,
            ..Default::default()
        };
        let out = sweep(&[alg.clone(), alg], &config).unwrap();
        assert_eq!(out.results.len(), 2);
        assert_eq!(out.results[0].best_params, out.results[1].best_params);
        assert_eq!(out.results[0].defect, out.results[1].defect);
        let empty = sweep(&[], &config).unwrap();
        assert!(empty.results.is_empty());
    }

    #[test]
    fn classification_predicates_survive_uniform_scaling() {
        // shifting all diagonal params rescales the metric; zero-defect and
        // zero-nabla predicates are preserved
        let su2 = su2();
        for shift in [-0.5f64, 0.5] {
            let mut params = vec![0.0; 6];
            for p in params.iter_mut().take(3) {
                *p = shift;
            }
            let m = metric_from_parameters(&su2, &params).unwrap();
            let ric = m.ricci();
            assert!(m.codazzi_defect(&ric).norm() < 1e-12);
            assert!(m.nabla_norm(&ric) < 1e-12);
        }
    }
}
