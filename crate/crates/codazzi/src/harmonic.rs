//! Eigenspace structure of a self-adjoint operator and the harmonic-curvature
//! characterization built on it.
//!
//! For a self-adjoint `T` with eigenvalues `λ₁ < … < λ_r` and eigenspaces
//! `g_i`, `T` satisfies the Codazzi equation exactly when
//!
//! 1. every `g_i` is a subalgebra,
//! 2. `⟨[w,u],v⟩ + ⟨[w,v],u⟩ = 0` for `u,v ∈ g_i`, `w ∈ g_j`, `i ≠ j`,
//! 3. for `i<j<k` and `u ∈ g_i, v ∈ g_j, w ∈ g_k`:
//!    `λ_{ij}²⟨[v,w],u⟩ + λ_{jk}²⟨[v,u],w⟩ = 0` and
//!    `λ_{ij}²⟨[u,w],v⟩ + λ_{ik}²⟨[u,v],w⟩ = 0`,
//!
//! and, given those, `T` is non-parallel exactly when some cross triple has
//! `⟨[u,v],w⟩ ≠ 0`. The checks here report per-condition residuals so a
//! failure names the condition that broke.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{MetricLieAlgebra, SymmetricOperator};
use crate::linalg::{basis_vector, inner, jacobi_eigen, vec_sub, Matrix, Subspace};
use crate::scalar::{Rat, Scalar};
use crate::tol;

/// Ordered eigenvalues with mutually orthogonal eigenspaces.
#[derive(Clone)]
pub struct RicciDecomposition<S> {
    operator: Matrix<S>,
    eigenvalues: Vec<S>,
    eigenspaces: Vec<Subspace<S>>,
}

impl<S: Scalar> RicciDecomposition<S> {
    pub fn eigenvalues(&self) -> &[S] {
        &self.eigenvalues
    }

    pub fn eigenspaces(&self) -> &[Subspace<S>] {
        &self.eigenspaces
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.eigenspaces.iter().map(|s| s.dim()).collect()
    }

    pub fn operator(&self) -> &Matrix<S> {
        &self.operator
    }

    pub fn count(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// Splits a self-adjoint operator into eigenspaces. Float mode clusters
/// eigenvalues with a relative gap tolerance and refuses to guess when the
/// gap pattern is ambiguous; exact mode recovers rational eigenvalues and
/// verifies them exactly.
pub fn decompose<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    t: &SymmetricOperator<S>,
    tol_eig: f64,
) -> Result<RicciDecomposition<S>> {
    let n = m.dim();
    if S::EXACT {
        decompose_exact(m, t)
    } else {
        // symmetric matrix of T in the orthonormal frame: Fᵀ G T F
        let f = Matrix::from_cols(m.frame());
        let tf = f
            .transpose()
            .mul(m.gram())
            .mul(t.matrix())
            .mul(&f);
        let sym = tf.add(&tf.transpose()).scale(&S::from_ratio(1, 2));
        let (vals, vecs) = jacobi_eigen(&sym.to_f64());
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap().then(a.cmp(&b)));
        let sorted: Vec<f64> = order.iter().map(|&i| vals[i]).collect();
        let scale = sorted.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
        let merge = tol_eig * scale;
        let mut clusters: Vec<Vec<usize>> = vec![vec![order[0]]];
        for w in 1..n {
            let gap = sorted[w] - sorted[w - 1];
            if gap <= merge {
                clusters.last_mut().unwrap().push(order[w]);
            } else if gap < 10.0 * merge {
                return Err(Error::ClusteringAmbiguous { gap, tol: merge });
            } else {
                clusters.push(vec![order[w]]);
            }
        }
        let mut eigenvalues = Vec::new();
        let mut eigenspaces = Vec::new();
        for cluster in clusters {
            let mean = cluster.iter().map(|&i| vals[i]).sum::<f64>() / cluster.len() as f64;
            eigenvalues.push(S::from_f64(mean));
            let basis: Vec<Vec<S>> = cluster
                .iter()
                .map(|&i| {
                    let w = vecs.col(i);
                    let mut v = vec![S::zero(); n];
                    for (a, frame_vec) in m.frame().iter().enumerate() {
                        crate::linalg::axpy(&mut v, &S::from_f64(w[a]), frame_vec);
                    }
                    v
                })
                .collect();
            eigenspaces.push(Subspace::from_independent(n, basis));
        }
        Ok(RicciDecomposition {
            operator: t.matrix().clone(),
            eigenvalues,
            eigenspaces,
        })
    }
}

fn decompose_exact<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    t: &SymmetricOperator<S>,
) -> Result<RicciDecomposition<S>> {
    let n = m.dim();
    let mat = t.matrix();
    let mut eigenvalues: Vec<S> = Vec::new();
    if mat.is_diagonal() {
        for i in 0..n {
            let d = mat[(i, i)].clone();
            if !eigenvalues.contains(&d) {
                eigenvalues.push(d);
            }
        }
    } else {
        eigenvalues = rational_eigenvalues(mat)?;
    }
    eigenvalues.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut eigenspaces = Vec::new();
    let mut total = 0;
    for lambda in &eigenvalues {
        let shifted = mat.sub(&Matrix::identity(n).scale(lambda));
        let kernel = shifted.kernel();
        if kernel.is_empty() {
            return Err(Error::ExactEigenFailed);
        }
        total += kernel.len();
        eigenspaces.push(Subspace::from_independent(
            n,
            gram_orthogonalize(m.gram(), &kernel),
        ));
    }
    if total != n {
        return Err(Error::ExactEigenFailed);
    }
    Ok(RicciDecomposition {
        operator: mat.clone(),
        eigenvalues,
        eigenspaces,
    })
}

/// Gram-Schmidt with respect to the inner product, without normalization.
fn gram_orthogonalize<S: Scalar>(gram: &Matrix<S>, vecs: &[Vec<S>]) -> Vec<Vec<S>> {
    let mut out: Vec<Vec<S>> = Vec::new();
    let mut lens: Vec<S> = Vec::new();
    for v in vecs {
        let mut f = v.clone();
        for (b, len) in out.iter().zip(&lens) {
            let c = inner(gram, &f, b) / len.clone();
            let proj = crate::linalg::vec_scale(&c, b);
            f = vec_sub(&f, &proj);
        }
        let len = inner(gram, &f, &f);
        if !len.is_zero() {
            out.push(f);
            lens.push(len);
        }
    }
    out
}

/// Exact eigenvalues of a rational matrix via its characteristic polynomial,
/// located with float hints and certified by exact evaluation.
fn rational_eigenvalues<S: Scalar>(mat: &Matrix<S>) -> Result<Vec<S>> {
    let n = mat.rows();
    // Faddeev-LeVerrier: p(x) = x^n + c[n-1] x^{n-1} + … + c[0]
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut mk: Matrix<S> = Matrix::identity(n);
    for k in 1..=n {
        mk = mat.mul(&mk);
        let ck = -(mk.trace() / S::from_int(k as i64));
        coeffs[n - k] = ck.clone();
        mk = mk.add(&Matrix::identity(n).scale(&ck));
    }
    let eval = |x: &S| -> S {
        let mut acc = S::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    };
    let (hints, _) = jacobi_eigen(&mat.to_f64());
    let mut roots: Vec<S> = Vec::new();
    for h in hints {
        if let Some(r) = rationalize(h, 1_000_000) {
            if eval(&r).is_zero() && !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    if roots.is_empty() {
        return Err(Error::ExactEigenFailed);
    }
    Ok(roots)
}

/// Best rational approximations of a double by continued fractions, returning
/// the first convergent that reproduces the value to float precision.
fn rationalize<S: Scalar>(x: f64, max_den: i64) -> Option<S> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1): (i64, i64) = (1, x.floor() as i64);
    let (mut k0, mut k1): (i64, i64) = (0, 1);
    let mut frac = x - x.floor();
    for _ in 0..40 {
        let cand = h1 as f64 / k1 as f64;
        if (cand - x).abs() <= 1e-9 * (1.0 + x.abs()) {
            return Some(S::from_ratio(h1, k1));
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraCheck {
    /// 1-based eigenspace index.
    pub index: usize,
    pub residual: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkewCheck {
    pub i: usize,
    pub j: usize,
    pub residual: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual_first: f64,
    pub residual_second: f64,
    pub ok: bool,
}

/// Per-condition residuals of the Codazzi characterization.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub subalgebra: Vec<SubalgebraCheck>,
    pub skew: Vec<SkewCheck>,
    pub cross: Vec<CrossCheck>,
    pub pass: bool,
}

/// Checks the three structure conditions against a decomposition. The
/// decomposition is re-validated first; a stale one is an error, not a
/// wrong answer.
pub fn verify_structure<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    dec: &RicciDecomposition<S>,
    tol_structure: f64,
) -> Result<StructureReport> {
    let n = m.dim();
    let r = dec.count();
    // staleness: every basis vector must still be an eigenvector
    let mut total = 0;
    for (lambda, space) in dec.eigenvalues().iter().zip(dec.eigenspaces()) {
        total += space.dim();
        for v in space.basis() {
            let tv = dec.operator().mat_vec(v);
            let lv = crate::linalg::vec_scale(lambda, v);
            let resid = vec_sub(&tv, &lv);
            let resid_norm = crate::linalg::dot(&resid, &resid).to_f64().max(0.0).sqrt();
            let v_norm = crate::linalg::dot(v, v).to_f64().sqrt();
            let scale = (1.0 + lambda.to_f64().abs()) * v_norm;
            let ok = if S::EXACT {
                resid.iter().all(|x| x.is_zero())
            } else {
                resid_norm <= tol::EIG_RESIDUAL * scale
            };
            if !ok {
                return Err(Error::StaleDecomposition {
                    residual: resid_norm / scale.max(1e-300),
                });
            }
        }
    }
    if total != n {
        return Err(Error::StaleDecomposition { residual: f64::NAN });
    }

    let len_sq = |space: &Subspace<S>, idx: usize| -> S {
        inner(m.gram(), &space.basis()[idx], &space.basis()[idx])
    };

    let mut subalgebra = Vec::new();
    for (i, space) in dec.eigenspaces().iter().enumerate() {
        let mut worst = 0.0f64;
        let mut exact_ok = true;
        let basis = space.basis();
        for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                let w = m.algebra().bracket(&basis[a], &basis[b])?;
                let proj = m.project_onto(space, &w);
                let out = vec_sub(&w, &proj);
                if S::EXACT && !out.iter().all(|x| x.is_zero()) {
                    exact_ok = false;
                }
                let out_norm_sq = inner(m.gram(), &out, &out).to_f64().max(0.0);
                let weight = (len_sq(space, a).clone() * len_sq(space, b)).to_f64();
                worst = worst.max((out_norm_sq / weight).sqrt());
            }
        }
        let ok = if S::EXACT {
            exact_ok
        } else {
            worst <= tol_structure
        };
        subalgebra.push(SubalgebraCheck {
            index: i + 1,
            residual: worst,
            ok,
        });
    }

    let mut skew = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let bi = dec.eigenspaces()[i].basis();
            let bj = dec.eigenspaces()[j].basis();
            let mut worst = 0.0f64;
            let mut exact_ok = true;
            for w in bj {
                let sw = inner(m.gram(), w, w).to_f64();
                for (a, u) in bi.iter().enumerate() {
                    for (b, v) in bi.iter().enumerate() {
                        let wu = m.algebra().bracket(w, u)?;
                        let wv = m.algebra().bracket(w, v)?;
                        let val = m.inner(&wu, v) + m.inner(&wv, u);
                        if S::EXACT && !val.is_zero() {
                            exact_ok = false;
                        }
                        let weight =
                            (len_sq(&dec.eigenspaces()[i], a).clone()
                                * len_sq(&dec.eigenspaces()[i], b))
                            .to_f64()
                                * sw;
                        worst = worst.max(val.to_f64().abs() / weight.sqrt());
                    }
                }
            }
            let ok = if S::EXACT {
                exact_ok
            } else {
                worst <= tol_structure
            };
            skew.push(SkewCheck {
                i: i + 1,
                j: j + 1,
                residual: worst,
                ok,
            });
        }
    }

    let mut cross = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            for k in (j + 1)..r {
                let lij = dec.eigenvalues()[i].clone() - dec.eigenvalues()[j].clone();
                let ljk = dec.eigenvalues()[j].clone() - dec.eigenvalues()[k].clone();
                let lik = dec.eigenvalues()[i].clone() - dec.eigenvalues()[k].clone();
                let lij2 = lij.clone() * lij;
                let ljk2 = ljk.clone() * ljk;
                let lik2 = lik.clone() * lik;
                let scale = lij2
                    .to_f64()
                    .abs()
                    .max(ljk2.to_f64().abs())
                    .max(lik2.to_f64().abs())
                    .max(1.0);
                let mut worst1 = 0.0f64;
                let mut worst2 = 0.0f64;
                let mut exact_ok = true;
                for (a, u) in dec.eigenspaces()[i].basis().iter().enumerate() {
                    for (b, v) in dec.eigenspaces()[j].basis().iter().enumerate() {
                        for (c, w) in dec.eigenspaces()[k].basis().iter().enumerate() {
                            let vw = m.algebra().bracket(v, w)?;
                            let vu = m.algebra().bracket(v, u)?;
                            let uw = m.algebra().bracket(u, w)?;
                            let uv = m.algebra().bracket(u, v)?;
                            let first = lij2.clone() * m.inner(&vw, u)
                                + ljk2.clone() * m.inner(&vu, w);
                            let second = lij2.clone() * m.inner(&uw, v)
                                + lik2.clone() * m.inner(&uv, w);
                            if S::EXACT && !(first.is_zero() && second.is_zero()) {
                                exact_ok = false;
                            }
                            let weight = (len_sq(&dec.eigenspaces()[i], a).clone()
                                * len_sq(&dec.eigenspaces()[j], b)
                                * len_sq(&dec.eigenspaces()[k], c))
                            .to_f64()
                            .sqrt()
                                * scale;
                            worst1 = worst1.max(first.to_f64().abs() / weight);
                            worst2 = worst2.max(second.to_f64().abs() / weight);
                        }
                    }
                }
                let ok = if S::EXACT {
                    exact_ok
                } else {
                    worst1 <= tol_structure && worst2 <= tol_structure
                };
                cross.push(CrossCheck {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    residual_first: worst1,
                    residual_second: worst2,
                    ok,
                });
            }
        }
    }

    let pass = subalgebra.iter().all(|c| c.ok)
        && skew.iter().all(|c| c.ok)
        && cross.iter().all(|c| c.ok);
    Ok(StructureReport {
        eigenvalues: dec.eigenvalues().iter().map(|x| x.to_f64()).collect(),
        multiplicities: dec.multiplicities(),
        subalgebra,
        skew,
        cross,
        pass,
    })
}

/// A cross triple witnessing that a Codazzi operator is not parallel.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// 1-based eigenspace indices `i < j < k`.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub w: Vec<f64>,
    pub value: f64,
}

/// Searches cross triples for `⟨[u,v],w⟩ ≠ 0`. For a Codazzi operator this
/// returns `None` exactly when the operator is parallel.
pub fn nonparallel_witness<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    dec: &RicciDecomposition<S>,
    witness_tol: f64,
) -> Option<Witness> {
    let r = dec.count();
    for i in 0..r {
        for j in (i + 1)..r {
            for k in (j + 1)..r {
                for u in dec.eigenspaces()[i].basis() {
                    for v in dec.eigenspaces()[j].basis() {
                        for w in dec.eigenspaces()[k].basis() {
                            let uv = m.algebra().bracket(u, v).expect("dims agree");
                            let val = m.inner(&uv, w);
                            let weight = (inner(m.gram(), u, u).clone()
                                * inner(m.gram(), v, v)
                                * inner(m.gram(), w, w))
                            .to_f64()
                            .sqrt();
                            let normalized = val.to_f64() / weight;
                            let hit = if S::EXACT {
                                !val.is_zero()
                            } else {
                                normalized.abs() > witness_tol
                            };
                            if hit {
                                return Some(Witness {
                                    i: i + 1,
                                    j: j + 1,
                                    k: k + 1,
                                    u: u.iter().map(|x| x.to_f64()).collect(),
                                    v: v.iter().map(|x| x.to_f64()).collect(),
                                    w: w.iter().map(|x| x.to_f64()).collect(),
                                    value: normalized,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// `p_i`: the part of `g_i` hit by brackets of the other eigenspaces,
/// `h_i`: its orthogonal complement inside `g_i`.
pub fn p_and_h_subspaces<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    dec: &RicciDecomposition<S>,
    i: usize,
) -> (Subspace<S>, Subspace<S>) {
    let n = m.dim();
    let r = dec.count();
    let gi = &dec.eigenspaces()[i];
    let mut gens = Vec::new();
    for j in 0..r {
        for k in 0..r {
            if j == k || j == i || k == i {
                continue;
            }
            for u in dec.eigenspaces()[j].basis() {
                for v in dec.eigenspaces()[k].basis() {
                    let br = m.algebra().bracket(u, v).expect("dims agree");
                    gens.push(m.project_onto(gi, &br));
                }
            }
        }
    }
    let p = Subspace::span(n, &gens);
    // h = vectors of g_i orthogonal to every generator of p
    let gi_basis = gi.basis();
    let h = if p.is_zero() {
        gi.clone()
    } else {
        let a = Matrix::from_fn(p.dim(), gi.dim(), |row, col| {
            inner(m.gram(), p.basis()[row].as_slice(), gi_basis[col].as_slice())
        });
        let coeffs = a.kernel();
        let basis: Vec<Vec<S>> = coeffs
            .iter()
            .map(|cv| {
                let mut out = vec![S::zero(); n];
                for (g, b) in gi_basis.iter().enumerate() {
                    crate::linalg::axpy(&mut out, &cv[g], b);
                }
                out
            })
            .collect();
        Subspace::span(n, &basis)
    };
    (p, h)
}

/// Builds the deformed product `⟨u,v⟩_k = Σ_j (δ_{jk} + (λ_j−λ_k)²)⟨u_j,v_j⟩`
/// and checks that `ad` of `g_k` acts skew-symmetrically for it and that
/// `ρ_k(u)v = Σ_{l≠k}[u,v]_l` is a homomorphism into the skew algebra of
/// `g_k^⊥`.
pub fn deformed_product_check<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    dec: &RicciDecomposition<S>,
    k: usize,
    tol_check: f64,
) -> Result<bool> {
    let n = m.dim();
    let r = dec.count();
    if r == 1 {
        return Ok(true);
    }
    // gram of the deformed product: Σ_j w_j Pⱼᵀ G Pⱼ
    let mut gram_k = Matrix::zeros(n, n);
    let mut projectors = Vec::new();
    for j in 0..r {
        let vj = Matrix::from_cols(dec.eigenspaces()[j].basis());
        let mj = vj.transpose().mul(m.gram()).mul(&vj);
        let pj = vj
            .mul(&mj.inverse().ok_or(Error::Singular)?)
            .mul(&vj.transpose())
            .mul(m.gram());
        projectors.push(pj);
    }
    for j in 0..r {
        let diff = dec.eigenvalues()[j].clone() - dec.eigenvalues()[k].clone();
        let mut w = diff.clone() * diff;
        if j == k {
            w = w + S::one();
        }
        gram_k = gram_k.add(&projectors[j].transpose().mul(m.gram()).mul(&projectors[j]).scale(&w));
    }
    let scale = gram_k.max_abs_f64().max(1.0);

    // skewness of every ad_u, u in g_k, for the deformed product
    for u in dec.eigenspaces()[k].basis() {
        let ad_u = m.algebra().ad(u);
        let skew = gram_k.mul(&ad_u).add(&ad_u.transpose().mul(&gram_k));
        let u_norm = inner(m.gram(), u, u).to_f64().sqrt().max(1e-300);
        let ok = if S::EXACT {
            skew == Matrix::zeros(n, n)
        } else {
            skew.max_abs_f64() / (scale * u_norm) <= tol_check
        };
        if !ok {
            return Ok(false);
        }
    }

    // ρ_k as matrices over the union basis of the other eigenspaces
    let mut perp_basis: Vec<Vec<S>> = Vec::new();
    for (j, space) in dec.eigenspaces().iter().enumerate() {
        if j != k {
            perp_basis.extend(space.basis().iter().cloned());
        }
    }
    let wmat = Matrix::from_cols(&perp_basis);
    let wgw = wmat.transpose().mul(m.gram()).mul(&wmat);
    let coords = wgw
        .inverse()
        .ok_or(Error::Singular)?
        .mul(&wmat.transpose())
        .mul(m.gram());
    let rho = |u: &[S]| -> Matrix<S> {
        let mut cols = Vec::new();
        for b in &perp_basis {
            let br = m.algebra().bracket(u, b).expect("dims agree");
            let off = vec_sub(&br, &projectors[k].mat_vec(&br));
            cols.push(coords.mat_vec(&off));
        }
        Matrix::from_cols(&cols)
    };
    let gk_basis = dec.eigenspaces()[k].basis();
    let rhos: Vec<Matrix<S>> = gk_basis.iter().map(|u| rho(u)).collect();
    // restricted deformed gram for the skew check on g_k^⊥
    let wgkw = wmat.transpose().mul(&gram_k).mul(&wmat);
    for r_u in &rhos {
        let skew = wgkw.mul(r_u).add(&r_u.transpose().mul(&wgkw));
        let ok = if S::EXACT {
            skew == Matrix::zeros(perp_basis.len(), perp_basis.len())
        } else {
            skew.max_abs_f64() / wgkw.max_abs_f64().max(1.0) <= tol_check
        };
        if !ok {
            return Ok(false);
        }
    }
    // homomorphism: ρ([u,u']) = [ρ(u), ρ(u')] for u, u' in g_k
    for (a, u) in gk_basis.iter().enumerate() {
        for (b, v) in gk_basis.iter().enumerate().skip(a + 1) {
            let br = m.algebra().bracket(u, v)?;
            let br_in = projectors[k].mat_vec(&br);
            let lhs = rho(&br_in);
            let rhs = rhos[a].commutator(&rhos[b]);
            let diff = lhs.sub(&rhs);
            let ok = if S::EXACT {
                diff == Matrix::zeros(perp_basis.len(), perp_basis.len())
            } else {
                let scale = lhs.max_abs_f64().max(rhs.max_abs_f64()).max(1.0);
                diff.max_abs_f64() / scale <= tol_check
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Residuals of the two restriction identities for `T = Ric`:
/// the eigenspace-restricted Ricci comparison and the scalar-curvature sum.
pub fn restriction_identity_residuals<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    dec: &RicciDecomposition<S>,
) -> Result<(S, S)> {
    let ric = m.ricci();
    let diff = dec.operator().sub(ric.matrix());
    let same = if S::EXACT {
        diff == Matrix::zeros(m.dim(), m.dim())
    } else {
        diff.max_abs_f64() <= 1e-9 * ric.matrix().max_abs_f64().max(1.0)
    };
    if !same {
        return Err(Error::InvalidInput(
            "restriction identities need the decomposition of the Ricci operator".into(),
        ));
    }
    let r = dec.count();
    let ric_form = m.ricci_bilinear();
    let mut first = S::zero();
    let mut scalar_sum = S::zero();
    for i in 0..r {
        let gi = &dec.eigenspaces()[i];
        let sub = m.restrict(gi)?;
        if gi.dim() == 0 {
            continue;
        }
        let ric_i_form = sub.ricci_bilinear();
        scalar_sum = scalar_sum + sub.scalar_curvature();
        for (alpha, u) in gi.basis().iter().enumerate() {
            let lhs = crate::linalg::dot(&ric_form.mat_vec(u), u);
            let rhs = ric_i_form[(alpha, alpha)].clone();
            let mut cross = S::zero();
            for j in 0..r {
                for k in 0..r {
                    if j == k || j == i || k == i {
                        continue;
                    }
                    let lam_ki = dec.eigenvalues()[k].clone() - dec.eigenvalues()[i].clone();
                    let lam_ji = dec.eigenvalues()[j].clone() - dec.eigenvalues()[i].clone();
                    let lam_kj = dec.eigenvalues()[k].clone() - dec.eigenvalues()[j].clone();
                    let coeff = lam_ki * lam_ji / (lam_kj.clone() * lam_kj);
                    for vb in dec.eigenspaces()[j].basis() {
                        for wc in dec.eigenspaces()[k].basis() {
                            let br = m.algebra().bracket(vb, wc)?;
                            let val = m.inner(&br, u);
                            let weight = inner(m.gram(), vb, vb) * inner(m.gram(), wc, wc);
                            cross = cross + coeff.clone() * val.clone() * val / weight;
                        }
                    }
                }
            }
            // normalize by the squared length of u so float and exact agree
            let su = inner(m.gram(), u, u);
            let resid = ((lhs - rhs + cross) / su).abs();
            if resid > first {
                first = resid;
            }
        }
    }
    let second = (m.scalar_curvature() - scalar_sum).abs();
    Ok((first, second))
}

/// Standardness report for solvable algebras with eigenspace-scalar Ricci on
/// the derived subalgebra.
#[derive(Clone, Debug, Serialize)]
pub struct StandardnessReport {
    pub derived_dim: usize,
    pub unimodular: bool,
    /// Ricci restricted to the derived subalgebra is a scalar multiple of the
    /// identity.
    pub ric_scalar_on_derived: bool,
    /// The scalar hypothesis is vacuous (derived subalgebra of dimension
    /// at most one), so the standardness conclusion is not asserted.
    pub hypothesis_vacuous: bool,
    pub scalar_residual: f64,
    pub c: Option<f64>,
    pub complement_abelian: bool,
    pub complement_bracket_max: f64,
    /// `|c + tr(S(ad_H)²)/tr(S(ad_H))|` for non-unimodular inputs.
    pub c_crosscheck_residual: Option<f64>,
    /// Scalar hypothesis held non-vacuously and the complement failed to be
    /// abelian. Must never fire on a valid solvable input.
    pub theorem_violation: bool,
}

pub fn standardness_check<S: Scalar>(
    m: &MetricLieAlgebra<S>,
    tol_scalar: f64,
) -> Result<StandardnessReport> {
    if !m.algebra().is_solvable() {
        return Err(Error::NotSolvable);
    }
    let n = m.dim();
    let derived = m.algebra().derived_subalgebra();
    let p = derived.dim();
    let ric = m.ricci();
    let unimodular = m.algebra().is_unimodular(1e-10);

    // restriction of Ric to the derived subalgebra in its basis coordinates
    let (ric_scalar_on_derived, scalar_residual, c) = if p == 0 {
        (true, 0.0, None)
    } else {
        let v = Matrix::from_cols(derived.basis());
        let gram_sub = v.transpose().mul(m.gram()).mul(&v);
        let coords = gram_sub
            .inverse()
            .ok_or(Error::Singular)?
            .mul(&v.transpose())
            .mul(m.gram());
        let restricted = coords.mul(&ric.matrix().mul(&v));
        let c_val = restricted.trace() / S::from_int(p as i64);
        let diff = restricted.sub(&Matrix::identity(p).scale(&c_val));
        let resid = diff.max_abs_f64();
        let ok = if S::EXACT {
            diff == Matrix::zeros(p, p)
        } else {
            resid <= tol_scalar * c_val.to_f64().abs().max(1.0)
        };
        (ok, resid, Some(c_val.to_f64()))
    };
    let hypothesis_vacuous = p <= 1;

    // orthogonal complement of the derived subalgebra
    let complement: Vec<Vec<S>> = if p == 0 {
        (0..n).map(|i| basis_vector(n, i)).collect()
    } else {
        let a = Matrix::from_fn(p, n, |row, col| {
            let gv = m.gram().mat_vec(&derived.basis()[row]);
            gv[col].clone()
        });
        a.kernel()
    };
    let mut bracket_max = 0.0f64;
    let mut abelian = true;
    for x in 0..complement.len() {
        for y in (x + 1)..complement.len() {
            let br = m
                .algebra()
                .bracket(&complement[x], &complement[y])?;
            let br_norm = inner(m.gram(), &br, &br).to_f64().max(0.0).sqrt();
            let weight = (inner(m.gram(), &complement[x], &complement[x])
                * inner(m.gram(), &complement[y], &complement[y]))
            .to_f64()
            .sqrt();
            let normalized = br_norm / weight;
            bracket_max = bracket_max.max(normalized);
            if S::EXACT {
                if !br.iter().all(|v| v.is_zero()) {
                    abelian = false;
                }
            } else if normalized > tol::ABELIAN {
                abelian = false;
            }
        }
    }

    let c_crosscheck_residual = match c {
        Some(c_val) if !unimodular && ric_scalar_on_derived => {
            let h = m.mean_curvature_vector();
            let ad_h = m.algebra().ad(&h);
            let s_ad_h = ad_h.add(&m.adjoint(&ad_h)).scale(&S::from_ratio(1, 2));
            let tr_s = s_ad_h.trace();
            let tr_s2 = s_ad_h.mul(&s_ad_h).trace();
            if tr_s.is_zero() {
                None
            } else {
                let c_formula = -(tr_s2 / tr_s);
                Some((c_val - c_formula.to_f64()).abs())
            }
        }
        _ => None,
    };

    Ok(StandardnessReport {
        derived_dim: p,
        unimodular,
        ric_scalar_on_derived,
        hypothesis_vacuous,
        scalar_residual,
        c,
        complement_abelian: abelian,
        complement_bracket_max: bracket_max,
        c_crosscheck_residual,
        theorem_violation: ric_scalar_on_derived && !hypothesis_vacuous && !abelian,
    })
}

/// Convenience: decompose the Ricci operator of a rational metric algebra.
pub fn decompose_ricci_exact(
    m: &MetricLieAlgebra<Rat>,
) -> Result<RicciDecomposition<Rat>> {
    let ric = m.ricci();
    decompose(m, &ric, tol::EIG_CLUSTER_REL)
}
