//! Geometry of a Lie algebra with a positive-definite inner product.
//!
//! The Levi-Civita product comes from Koszul's formula
//!
//! ```text
//! 2⟨L_u v, w⟩ = ⟨[u,v],w⟩ + ⟨[w,u],v⟩ + ⟨[w,v],u⟩,
//! ```
//!
//! the curvature is `K(u,v) = L_{[u,v]} − [L_u, L_v]`, and the Ricci operator
//! is the trace `ric(u,v) = tr(w ↦ K(u,w)v)` raised by the inverse Gram
//! matrix. A second, independent route to the same operator goes through the
//! structure formula `Ric = R − B/2 − S(ad_H)`; the two must agree and the
//! test suite holds them to that.
//!
//! All adjoints are taken with respect to the Gram matrix, never the
//! identity, so nothing silently assumes an orthonormal standard basis.
//! Norms are Frobenius norms over the stored frame: genuinely orthonormal in
//! float mode, orthogonal with exact squared lengths in rational mode (the
//! weighted sums agree with the orthonormal-frame values, and stay inside
//! the scalar field).

use crate::error::{Error, Result};
use crate::linalg::{basis_vector, gram_frame, inner, vec_sub, Matrix, Subspace};
use crate::scalar::{approx_zero, Scalar};
use crate::tol;

#[derive(Clone)]
pub struct MetricLieAlgebra<S> {
    alg: crate::LieAlgebra<S>,
    gram: Matrix<S>,
    gram_inv: Matrix<S>,
    frame: Vec<Vec<S>>,
    frame_len_sq: Vec<S>,
    levi: Vec<Matrix<S>>,
}

/// An endomorphism that is self-adjoint with respect to the Gram matrix.
#[derive(Clone, Debug)]
pub struct SymmetricOperator<S: Scalar> {
    matrix: Matrix<S>,
}

impl<S: Scalar> SymmetricOperator<S> {
    /// Validates `G·M = (G·M)ᵀ` before wrapping.
    pub fn new(matrix: Matrix<S>, m: &MetricLieAlgebra<S>) -> Result<Self> {
        let gm = m.gram.mul(&matrix);
        if !gm.is_symmetric(tol::SELF_ADJOINT) {
            return Err(Error::NotSelfAdjoint);
        }
        Ok(SymmetricOperator { matrix })
    }

    pub(crate) fn new_unchecked(matrix: Matrix<S>) -> Self {
        SymmetricOperator { matrix }
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let n = entries.len();
        SymmetricOperator {
            matrix: Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    entries[i].clone()
                } else {
                    S::zero()
                }
            }),
        }
    }

    pub fn scaled_identity(n: usize, lambda: S) -> Self {
        SymmetricOperator {
            matrix: Matrix::identity(n).scale(&lambda),
        }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.mat_vec(v)
    }
}

/// The antisymmetrized residual of the Codazzi equation,
/// `d(u,v,w) = ⟨(∇_u T)v − (∇_v T)u, w⟩`, tabulated over the frame.
#[derive(Clone, Debug)]
pub struct CodazziDefect<S> {
    dim: usize,
    /// `d(f_a, f_b, f_c)` flattened as `(a*dim + b)*dim + c`.
    pub tensor: Vec<S>,
    /// Squared Frobenius norm over an orthonormal frame.
    pub norm_sq: S,
    /// Largest orthonormal-frame entry in absolute value.
    pub max_entry: f64,
}

impl<S: Scalar> CodazziDefect<S> {
    pub fn norm(&self) -> f64 {
        self.norm_sq.to_f64().max(0.0).sqrt()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        if S::EXACT {
            self.norm_sq.is_zero()
        } else {
            self.norm() <= tol
        }
    }

    pub fn entry(&self, a: usize, b: usize, c: usize) -> &S {
        &self.tensor[(a * self.dim + b) * self.dim + c]
    }
}

impl<S: Scalar> MetricLieAlgebra<S> {
    /// Pairs an algebra with a Gram matrix. Rejects non-symmetric and
    /// non-positive-definite inner products (leading principal minors in
    /// exact mode, smallest eigenvalue in float mode). The orthogonal frame
    /// and the Levi-Civita matrices are computed here, once.
    pub fn new(alg: crate::LieAlgebra<S>, gram: Matrix<S>) -> Result<Self> {
        let n = alg.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: gram.rows(),
            });
        }
        if !gram.is_symmetric(tol::SELF_ADJOINT) {
            return Err(Error::GramNotSymmetric);
        }
        if S::EXACT {
            for k in 1..=n {
                let minor = Matrix::from_fn(k, k, |i, j| gram[(i, j)].clone()).determinant();
                if minor <= S::zero() {
                    return Err(Error::NotPositiveDefinite);
                }
            }
        } else {
            let (vals, _) = crate::linalg::jacobi_eigen(&gram.to_f64());
            let scale = vals.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
            if vals.iter().any(|&v| v <= tol::POS_DEF_MIN * scale) {
                return Err(Error::NotPositiveDefinite);
            }
        }
        let gram_inv = gram.inverse().ok_or(Error::NotPositiveDefinite)?;
        let (frame, frame_len_sq) = gram_frame(&gram)?;

        // G·L_i from Koszul, then raise with the inverse Gram matrix.
        let mut levi = Vec::with_capacity(n);
        let half = S::from_ratio(1, 2);
        let gb: Vec<Vec<Vec<S>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| gram.mat_vec(&alg.bracket_basis(i, j)))
                    .collect()
            })
            .collect();
        for i in 0..n {
            let mut rhs = Matrix::zeros(n, n);
            for j in 0..n {
                for k in 0..n {
                    // 2⟨L_{e_i} e_j, e_k⟩ = ⟨[e_i,e_j],e_k⟩ + ⟨[e_k,e_i],e_j⟩ + ⟨[e_k,e_j],e_i⟩
                    let val = gb[i][j][k].clone() + gb[k][i][j].clone() + gb[k][j][i].clone();
                    rhs[(k, j)] = half.clone() * val;
                }
            }
            levi.push(gram_inv.mul(&rhs));
        }
        Ok(MetricLieAlgebra {
            alg,
            gram,
            gram_inv,
            frame,
            frame_len_sq,
            levi,
        })
    }

    /// Identity inner product.
    pub fn euclidean(alg: crate::LieAlgebra<S>) -> Result<Self> {
        let n = alg.dim();
        Self::new(alg, Matrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &crate::LieAlgebra<S> {
        &self.alg
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix<S> {
        &self.gram_inv
    }

    pub fn frame(&self) -> &[Vec<S>] {
        &self.frame
    }

    pub fn frame_len_sq(&self) -> &[S] {
        &self.frame_len_sq
    }

    pub fn inner(&self, x: &[S], y: &[S]) -> S {
        inner(&self.gram, x, y)
    }

    pub fn to_float(&self) -> MetricLieAlgebra<f64> {
        MetricLieAlgebra::new(self.alg.to_float(), self.gram.to_f64())
            .expect("valid metric stays valid")
    }

    /// Adjoint with respect to the inner product: `G⁻¹ Mᵀ G`.
    pub fn adjoint(&self, m: &Matrix<S>) -> Matrix<S> {
        self.gram_inv.mul(&m.transpose().mul(&self.gram))
    }

    /// Matrix of `L_{e_i}` in the standard basis.
    pub fn levi_basis(&self, i: usize) -> &Matrix<S> {
        &self.levi[i]
    }

    /// Matrix of `L_u` for an arbitrary vector.
    pub fn levi_civita(&self, u: &[S]) -> Matrix<S> {
        assert_eq!(u.len(), self.dim());
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            out = out.add(&self.levi[i].scale(&u[i]));
        }
        out
    }

    /// `K(u,v) = L_{[u,v]} − [L_u, L_v]`.
    pub fn curvature(&self, u: &[S], v: &[S]) -> Matrix<S> {
        let br = self.alg.bracket(u, v).expect("dimension checked");
        let lu = self.levi_civita(u);
        let lv = self.levi_civita(v);
        self.levi_civita(&br).sub(&lu.commutator(&lv))
    }

    /// All `K(e_i, e_j)` for `i < j` (the antisymmetric complement is implied).
    fn curvature_basis(&self) -> Vec<Vec<Matrix<S>>> {
        let n = self.dim();
        let mut out: Vec<Vec<Matrix<S>>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                let lbr = self.levi_civita(&self.alg.bracket_basis(i, j));
                out[i].push(lbr.sub(&self.levi[i].commutator(&self.levi[j])));
            }
        }
        out
    }

    fn curvature_from_basis(&self, kb: &[Vec<Matrix<S>>], i: usize, j: usize) -> Matrix<S> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => kb[i][j - i - 1].clone(),
            Ordering::Greater => kb[j][i - j - 1].scale(&(-S::one())),
            Ordering::Equal => Matrix::zeros(self.dim(), self.dim()),
        }
    }

    /// Ricci bilinear form `ric(e_i, e_j)` in the standard basis.
    pub fn ricci_bilinear(&self) -> Matrix<S> {
        let n = self.dim();
        let kb = self.curvature_basis();
        let mut ric = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                // tr(w ↦ K(e_i, w) e_j)
                let mut s = S::zero();
                for m in 0..n {
                    if m == i {
                        continue;
                    }
                    let k = self.curvature_from_basis(&kb, i, m);
                    s = s + k[(m, j)].clone();
                }
                ric[(i, j)] = s;
            }
        }
        // symmetric up to rounding; average to keep float mode tidy
        let half = S::from_ratio(1, 2);
        ric.add(&ric.transpose()).scale(&half)
    }

    /// Ricci operator from the curvature trace.
    pub fn ricci(&self) -> SymmetricOperator<S> {
        SymmetricOperator::new_unchecked(self.gram_inv.mul(&self.ricci_bilinear()))
    }

    /// Mean curvature vector: the metric dual of `u ↦ tr(ad_u)`.
    pub fn mean_curvature_vector(&self) -> Vec<S> {
        self.gram_inv.mat_vec(&self.alg.ad_traces())
    }

    /// Ricci operator assembled as `R − B/2 − S(ad_H)`: an independent route
    /// that must agree with [`MetricLieAlgebra::ricci`].
    pub fn ricci_structure_formula(&self) -> SymmetricOperator<S> {
        let n = self.dim();
        let half = S::from_ratio(1, 2);
        let quarter = S::from_ratio(1, 4);

        // bilinear R over the frame, with exact length corrections
        let mut r_form = Matrix::zeros(n, n);
        let bracket_uf: Vec<Vec<Vec<S>>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|a| {
                        self.alg
                            .bracket(&basis_vector(n, u), &self.frame[a])
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let frame_brackets: Vec<Vec<Vec<S>>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.alg.bracket(&self.frame[a], &self.frame[b]).unwrap())
                    .collect()
            })
            .collect();
        for u in 0..n {
            for v in u..n {
                let mut first = S::zero();
                let mut second = S::zero();
                for a in 0..n {
                    for b in 0..n {
                        let w = S::one() / (self.frame_len_sq[a].clone() * self.frame_len_sq[b].clone());
                        let fu = inner(&self.gram, &bracket_uf[u][a], &self.frame[b]);
                        let fv = inner(&self.gram, &bracket_uf[v][a], &self.frame[b]);
                        first = first + w.clone() * fu * fv;
                        let gu = inner(&self.gram, &frame_brackets[a][b], &basis_vector(n, u));
                        let gv = inner(&self.gram, &frame_brackets[a][b], &basis_vector(n, v));
                        second = second + w * gu * gv;
                    }
                }
                let val = quarter.clone() * second - half.clone() * first;
                r_form[(u, v)] = val.clone();
                r_form[(v, u)] = val;
            }
        }
        let r_op = self.gram_inv.mul(&r_form);

        let b_op = self.gram_inv.mul(&self.alg.killing_form());

        let h = self.mean_curvature_vector();
        let ad_h = self.alg.ad(&h);
        let s_ad_h = ad_h.add(&self.adjoint(&ad_h)).scale(&half);

        let ric = r_op.sub(&b_op.scale(&half)).sub(&s_ad_h);
        SymmetricOperator::new_unchecked(ric)
    }

    /// Scalar curvature: trace of the Ricci operator.
    pub fn scalar_curvature(&self) -> S {
        self.gram_inv.mul(&self.ricci_bilinear()).trace()
    }

    /// `∇_u T = L_u ∘ T − T ∘ L_u` for self-adjoint `T`.
    pub fn covariant_derivative(&self, t: &SymmetricOperator<S>, u: &[S]) -> Matrix<S> {
        self.levi_civita(u).commutator(t.matrix())
    }

    /// Codazzi defect of `T`, tabulated over the frame.
    pub fn codazzi_defect(&self, t: &SymmetricOperator<S>) -> CodazziDefect<S> {
        let n = self.dim();
        let nablas: Vec<Matrix<S>> = (0..n)
            .map(|a| self.levi_civita(&self.frame[a]).commutator(t.matrix()))
            .collect();
        // w[a][b] = (∇_{f_a} T) f_b
        let w: Vec<Vec<Vec<S>>> = (0..n)
            .map(|a| (0..n).map(|b| nablas[a].mat_vec(&self.frame[b])).collect())
            .collect();
        let g_frame: Vec<Vec<S>> = (0..n).map(|c| self.gram.mat_vec(&self.frame[c])).collect();
        let mut tensor = vec![S::zero(); n * n * n];
        let mut norm_sq = S::zero();
        let mut max_entry: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let diff = vec_sub(&w[a][b], &w[b][a]);
                for c in 0..n {
                    let d = crate::linalg::dot(&diff, &g_frame[c]);
                    let weight = S::one()
                        / (self.frame_len_sq[a].clone()
                            * self.frame_len_sq[b].clone()
                            * self.frame_len_sq[c].clone());
                    let contrib = d.clone() * d.clone() * weight.clone();
                    norm_sq = norm_sq + contrib;
                    let normalized = d.to_f64().abs() * weight.to_f64().sqrt();
                    if normalized > max_entry {
                        max_entry = normalized;
                    }
                    tensor[(a * n + b) * n + c] = d;
                }
            }
        }
        CodazziDefect {
            dim: n,
            tensor,
            norm_sq,
            max_entry,
        }
    }

    /// Squared Frobenius norm of `u ↦ ∇_u T` over an orthonormal frame.
    pub fn nabla_norm_sq(&self, t: &SymmetricOperator<S>) -> S {
        let n = self.dim();
        let g_frame: Vec<Vec<S>> = (0..n).map(|c| self.gram.mat_vec(&self.frame[c])).collect();
        let mut total = S::zero();
        for a in 0..n {
            let nabla = self.levi_civita(&self.frame[a]).commutator(t.matrix());
            for b in 0..n {
                let nb = nabla.mat_vec(&self.frame[b]);
                for c in 0..n {
                    let d = crate::linalg::dot(&nb, &g_frame[c]);
                    let weight = S::one()
                        / (self.frame_len_sq[a].clone()
                            * self.frame_len_sq[b].clone()
                            * self.frame_len_sq[c].clone());
                    total = total + d.clone() * d * weight;
                }
            }
        }
        total
    }

    /// `‖∇T‖` as a float.
    pub fn nabla_norm(&self, t: &SymmetricOperator<S>) -> f64 {
        self.nabla_norm_sq(t).to_f64().max(0.0).sqrt()
    }

    /// Squared norm of the curvature divergence
    /// `(X,Y,Z) ↦ Σ_a ⟨(∇_{f_a} K)(f_a, X) Y, Z⟩`.
    pub fn curvature_divergence_norm_sq(&self) -> S {
        let n = self.dim();
        let kb = self.curvature_basis();
        // K(u, v) by bilinearity from the basis table
        let k_of = |u: &[S], v: &[S]| -> Matrix<S> {
            let mut out = Matrix::zeros(n, n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let coeff = u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
                    if coeff.is_zero() {
                        continue;
                    }
                    out = out.add(&kb[i][j - i - 1].scale(&coeff));
                }
            }
            out
        };
        let g_frame: Vec<Vec<S>> = (0..n).map(|c| self.gram.mat_vec(&self.frame[c])).collect();
        let mut total = S::zero();
        // div(x,y,z) accumulated as vectors W_xy = Σ_a (∇_{f_a} K)(f_a, f_x) f_y / s_a
        for x in 0..n {
            let fx = &self.frame[x];
            let mut w_xy: Vec<Vec<S>> = vec![vec![S::zero(); n]; n];
            for a in 0..n {
                let fa = &self.frame[a];
                let la = self.levi_civita(fa);
                let k_ax = k_of(fa, fx);
                let k_lafa_x = k_of(&la.mat_vec(fa), fx);
                let k_a_lafx = k_of(fa, &la.mat_vec(fx));
                let inv_sa = S::one() / self.frame_len_sq[a].clone();
                for (y, w_y) in w_xy.iter_mut().enumerate() {
                    let fy = &self.frame[y];
                    let mut v = la.mat_vec(&k_ax.mat_vec(fy));
                    v = vec_sub(&v, &k_lafa_x.mat_vec(fy));
                    v = vec_sub(&v, &k_a_lafx.mat_vec(fy));
                    v = vec_sub(&v, &k_ax.mat_vec(&la.mat_vec(fy)));
                    for (acc, term) in w_y.iter_mut().zip(v) {
                        *acc = acc.clone() + inv_sa.clone() * term;
                    }
                }
            }
            for y in 0..n {
                for (z, gz) in g_frame.iter().enumerate() {
                    let d = crate::linalg::dot(&w_xy[y], gz);
                    let weight = S::one()
                        / (self.frame_len_sq[x].clone()
                            * self.frame_len_sq[y].clone()
                            * self.frame_len_sq[z].clone());
                    total = total + d.clone() * d * weight;
                }
            }
        }
        total
    }

    pub fn curvature_divergence_norm(&self) -> f64 {
        self.curvature_divergence_norm_sq().to_f64().max(0.0).sqrt()
    }

    /// For `s ⊥ [g,g]`: residual of `ric(s,s) = −tr((ad_s + ad_s*)²)/4`.
    pub fn orthogonal_ric_identity_residual(&self, s: &[S]) -> Result<S> {
        if s.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.len(),
            });
        }
        let derived = self.alg.derived_subalgebra();
        let s_norm = self.inner(s, s).to_f64().sqrt().max(1.0);
        for b in derived.basis() {
            let b_norm = self.inner(b, b).to_f64().sqrt().max(1e-300);
            let ip = self.inner(s, b);
            if !approx_zero(&ip, 1e-8 * s_norm * b_norm) {
                return Err(Error::NotOrthogonalToDerived);
            }
        }
        let ric = self.ricci_bilinear();
        let ric_ss = crate::linalg::dot(&ric.mat_vec(s), s);
        let ad_s = self.alg.ad(s);
        let sym = ad_s.add(&self.adjoint(&ad_s));
        let tr = sym.mul(&sym).trace();
        Ok((ric_ss + S::from_ratio(1, 4) * tr).abs())
    }

    /// Metric Lie algebra induced on a bracket-closed subspace, with the
    /// restricted inner product. Errors when the subspace is not closed.
    pub fn restrict(&self, sub: &Subspace<S>) -> Result<MetricLieAlgebra<S>> {
        let k = sub.dim();
        let basis = sub.basis();
        if k == 0 {
            return MetricLieAlgebra::new(
                crate::LieAlgebra::abelian(1),
                Matrix::identity(1),
            );
        }
        let v = Matrix::from_cols(basis);
        let gram_sub = v.transpose().mul(&self.gram).mul(&v);
        let proj = gram_sub
            .inverse()
            .ok_or(Error::NotPositiveDefinite)?
            .mul(&v.transpose())
            .mul(&self.gram);
        let mut c = vec![S::zero(); k * k * k];
        for a in 0..k {
            for b in (a + 1)..k {
                let w = self.alg.bracket(&basis[a], &basis[b])?;
                let coords = proj.mat_vec(&w);
                // membership check: the reconstruction must reproduce w
                let mut recon = vec![S::zero(); self.dim()];
                for (g, coord) in coords.iter().enumerate() {
                    crate::linalg::axpy(&mut recon, coord, &basis[g]);
                }
                let resid = vec_sub(&w, &recon);
                let resid_norm = crate::linalg::dot(&resid, &resid).to_f64().sqrt();
                let scale = crate::linalg::dot(&w, &w).to_f64().sqrt().max(1.0);
                let closed = if S::EXACT {
                    resid.iter().all(|x| x.is_zero())
                } else {
                    resid_norm <= tol::MEMBERSHIP * scale
                };
                if !closed {
                    return Err(Error::NotClosed {
                        residual: resid_norm,
                    });
                }
                for g in 0..k {
                    c[(a * k + b) * k + g] = coords[g].clone();
                    c[(b * k + a) * k + g] = -coords[g].clone();
                }
            }
        }
        MetricLieAlgebra::new(crate::LieAlgebra::new(k, c)?, gram_sub)
    }

    /// Orthogonal projection onto a subspace, as coefficients in the ambient
    /// basis.
    pub fn project_onto(&self, sub: &Subspace<S>, v: &[S]) -> Vec<S> {
        let n = self.dim();
        if sub.dim() == 0 {
            return vec![S::zero(); n];
        }
        let basis = sub.basis();
        let vm = Matrix::from_cols(basis);
        let gram_sub = vm.transpose().mul(&self.gram).mul(&vm);
        let rhs = vm.transpose().mat_vec(&self.gram.mat_vec(v));
        let rhs_m = Matrix::from_cols(&[rhs]);
        let coords = gram_sub.solve(&rhs_m).expect("independent basis");
        let mut out = vec![S::zero(); n];
        for (g, b) in basis.iter().enumerate() {
            crate::linalg::axpy(&mut out, &coords[(g, 0)], b);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Rat;

    fn su2_metric() -> MetricLieAlgebra<Rat> {
        catalog::named("su2_biinvariant", None).unwrap()
    }

    fn heis() -> MetricLieAlgebra<Rat> {
        catalog::named("heisenberg3", None).unwrap()
    }

    #[test]
    fn abelian_geometry_is_flat() {
        let m = catalog::named::<Rat>("abelian", Some(4)).unwrap();
        for i in 0..4 {
            assert_eq!(*m.levi_basis(i), Matrix::zeros(4, 4));
        }
        let ric = m.ricci();
        assert_eq!(*ric.matrix(), Matrix::zeros(4, 4));
        assert!(m.scalar_curvature().is_zero());
        assert!(m.curvature_divergence_norm_sq().is_zero());
        let t = SymmetricOperator::diagonal(&[
            Rat::from_int(1),
            Rat::from_int(2),
            Rat::from_int(3),
            Rat::from_int(4),
        ]);
        assert!(m.nabla_norm_sq(&t).is_zero());
        assert!(m.codazzi_defect(&t).norm_sq.is_zero());
    }

    #[test]
    fn su2_levi_civita_is_half_ad() {
        let m = su2_metric();
        for i in 0..3 {
            let half_ad = m.algebra().ad_basis(i).scale(&Rat::from_ratio(1, 2));
            assert_eq!(*m.levi_basis(i), half_ad);
        }
    }

    #[test]
    fn su2_curvature_is_quarter_ad_of_bracket() {
        let m = su2_metric();
        let e1 = basis_vector::<Rat>(3, 0);
        let e2 = basis_vector::<Rat>(3, 1);
        let k = m.curvature(&e1, &e2);
        let br = m.algebra().bracket(&e1, &e2).unwrap();
        let expect = m.algebra().ad(&br).scale(&Rat::from_ratio(1, 4));
        assert_eq!(k, expect);
    }

    #[test]
    fn su2_ricci_is_half_identity() {
        let m = su2_metric();
        let expect = Matrix::identity(3).scale(&Rat::from_ratio(1, 2));
        assert_eq!(*m.ricci().matrix(), expect);
        assert_eq!(*m.ricci_structure_formula().matrix(), expect);
        assert_eq!(m.scalar_curvature(), Rat::from_ratio(3, 2));
    }

    #[test]
    fn heisenberg_ricci_spectrum() {
        let m = heis();
        let expect = SymmetricOperator::diagonal(&[
            Rat::from_ratio(-1, 2),
            Rat::from_ratio(-1, 2),
            Rat::from_ratio(1, 2),
        ]);
        assert_eq!(*m.ricci().matrix(), *expect.matrix());
        assert_eq!(m.scalar_curvature(), Rat::from_ratio(-1, 2));
    }

    #[test]
    fn defect_tensor_is_antisymmetric_in_first_pair() {
        let m = heis();
        let ric = m.ricci();
        let defect = m.codazzi_defect(&ric);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let lhs = defect.entry(a, b, c).clone();
                    let rhs = -defect.entry(b, a, c).clone();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn heisenberg_defect_values() {
        // frozen exact values: ‖defect(Ric)‖² = 3, ‖∇Ric‖² = 1
        let m = heis();
        let ric = m.ricci();
        assert_eq!(m.codazzi_defect(&ric).norm_sq, Rat::from_int(3));
        assert_eq!(m.nabla_norm_sq(&ric), Rat::from_int(1));
        assert!(m.curvature_divergence_norm_sq() > Rat::zero());
    }

    #[test]
    fn hyperbolic_solvable_geometry() {
        for n in [3usize, 4, 5] {
            let m = catalog::named::<Rat>("hyperbolic_solvable", Some(n)).unwrap();
            // L_{e_i} e_i = H basis vector for i < n-1
            for i in 0..(n - 1) {
                let li = m.levi_basis(i);
                let col = li.col(i);
                let mut expect = vec![Rat::zero(); n];
                expect[n - 1] = Rat::one();
                assert_eq!(col, expect);
            }
            let expect_ric =
                Matrix::identity(n).scale(&Rat::from_int(-((n as i64) - 1)));
            assert_eq!(*m.ricci().matrix(), expect_ric);
            // mean curvature vector is (n-1)·e_n
            let h = m.mean_curvature_vector();
            let mut expect_h = vec![Rat::zero(); n];
            expect_h[n - 1] = Rat::from_int(n as i64 - 1);
            assert_eq!(h, expect_h);
            // Einstein, so the Ricci operator is parallel and Codazzi
            let ric = m.ricci();
            assert!(m.nabla_norm_sq(&ric).is_zero());
            assert!(m.codazzi_defect(&ric).norm_sq.is_zero());
            assert!(m.curvature_divergence_norm_sq().is_zero());
        }
    }

    #[test]
    fn mean_curvature_of_unimodular_vanishes() {
        for m in [su2_metric(), heis()] {
            assert!(m.mean_curvature_vector().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn covariant_derivative_of_scalar_operator_vanishes() {
        let m = heis();
        let t = SymmetricOperator::scaled_identity(3, Rat::from_ratio(7, 3));
        for i in 0..3 {
            let nabla = m.covariant_derivative(&t, &basis_vector(3, i));
            assert_eq!(nabla, Matrix::zeros(3, 3));
        }
    }

    #[test]
    fn metric_compatibility_and_torsion() {
        // random-ish rational gram on the Heisenberg algebra
        let alg = heis().algebra().clone();
        let gram = Matrix::from_rows(&[
            vec![Rat::from_int(2), Rat::from_ratio(1, 3), Rat::zero()],
            vec![Rat::from_ratio(1, 3), Rat::from_int(1), Rat::from_ratio(1, 5)],
            vec![Rat::zero(), Rat::from_ratio(1, 5), Rat::from_int(3)],
        ]);
        let m = MetricLieAlgebra::new(alg, gram).unwrap();
        for i in 0..3 {
            let li = m.levi_basis(i);
            // skew-adjoint: G L + Lᵀ G = 0
            let skew = m.gram().mul(li).add(&li.transpose().mul(m.gram()));
            assert_eq!(skew, Matrix::zeros(3, 3));
        }
        for i in 0..3 {
            for j in 0..3 {
                let li_ej = m.levi_basis(i).col(j);
                let lj_ei = m.levi_basis(j).col(i);
                let br = m.algebra().bracket_basis(i, j);
                let torsion = vec_sub(&vec_sub(&li_ej, &lj_ei), &br);
                assert!(torsion.iter().all(|x| x.is_zero()));
            }
        }
        // dual-path Ricci agreement with a non-identity gram, exactly
        assert_eq!(
            *m.ricci().matrix(),
            *m.ricci_structure_formula().matrix()
        );
    }

    #[test]
    fn pair_symmetry_of_curvature() {
        let m = su2_metric();
        for u in 0..3 {
            for v in 0..3 {
                for w in 0..3 {
                    for z in 0..3 {
                        let k_uv = m.curvature(&basis_vector(3, u), &basis_vector(3, v));
                        let k_wz = m.curvature(&basis_vector(3, w), &basis_vector(3, z));
                        let lhs = m.inner(&k_uv.col(w), &basis_vector(3, z));
                        let rhs = m.inner(&k_wz.col(u), &basis_vector(3, v));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn first_bianchi_on_float_fixture() {
        let m = catalog::named::<f64>("sl2r", None).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                for w in 0..3 {
                    let mut total = [0.0; 3];
                    let pairs = [(u, v, w), (v, w, u), (w, u, v)];
                    for (a, b, c) in pairs {
                        let k = m.curvature(&basis_vector(3, a), &basis_vector(3, b));
                        let kc = k.col(c);
                        for (t, x) in total.iter_mut().zip(kc) {
                            *t += x;
                        }
                    }
                    assert!(total.iter().all(|x| x.abs() < 1e-10));
                }
            }
        }
    }

    #[test]
    fn orthogonal_ric_identity_on_hyperbolic() {
        let m = catalog::named::<Rat>("hyperbolic_solvable", Some(4)).unwrap();
        let s = basis_vector::<Rat>(4, 3);
        let resid = m.orthogonal_ric_identity_residual(&s).unwrap();
        assert!(resid.is_zero());
        // and the non-orthogonal direction errors out
        let bad = basis_vector::<Rat>(4, 0);
        assert!(m.orthogonal_ric_identity_residual(&bad).is_err());
    }

    #[test]
    fn rejects_bad_gram() {
        let alg = crate::LieAlgebra::<f64>::abelian(2);
        let asym = Matrix::from_rows(&[vec![1.0, 0.5], vec![0.0, 1.0]]);
        assert!(MetricLieAlgebra::new(alg.clone(), asym).is_err());
        let indef = Matrix::from_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
        assert!(MetricLieAlgebra::new(alg, indef).is_err());
    }

    #[test]
    fn rejects_non_self_adjoint_operator() {
        let m = su2_metric();
        let bad = Matrix::from_rows(&[
            vec![Rat::zero(), Rat::one(), Rat::zero()],
            vec![Rat::zero(), Rat::zero(), Rat::zero()],
            vec![Rat::zero(), Rat::zero(), Rat::zero()],
        ]);
        assert!(SymmetricOperator::new(bad, &m).is_err());
    }
}
