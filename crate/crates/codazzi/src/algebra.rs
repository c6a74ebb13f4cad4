//! Lie algebras given by structure constants, with the bracket, Jacobi
//! defect, Killing form and the structural predicates built on them.
//!
//! `c[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`; indices are
//! 0-based internally and 1-based in every serialized format.

use crate::error::{Error, Result};
use crate::linalg::{basis_vector, Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct LieAlgebra<S> {
    dim: usize,
    /// Flat `dim^3` structure constants, index `(i*dim + j)*dim + k`.
    c: Vec<S>,
    labels: Option<Vec<String>>,
}

impl<S: Scalar> LieAlgebra<S> {
    pub fn new(dim: usize, c: Vec<S>) -> Result<Self> {
        if dim == 0 || c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        let alg = LieAlgebra {
            dim,
            c,
            labels: None,
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let lhs = alg.c(i, j, k).clone();
                    let rhs = -alg.c(j, i, k).clone();
                    let bad = if S::EXACT {
                        lhs != rhs
                    } else {
                        (lhs.to_f64() - rhs.to_f64()).abs() > 1e-12
                    };
                    if bad {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Builds from the upper triangle: entries `(i, j, k, value)` with `i < j`
    /// contribute `value * e_k` to `[e_i, e_j]`; the antisymmetric counterpart
    /// is filled in automatically. Duplicate `(i, j, k)` entries accumulate.
    pub fn from_brackets(dim: usize, entries: &[(usize, usize, usize, S)]) -> Result<Self> {
        let mut c = vec![S::zero(); dim * dim * dim];
        for (i, j, k, v) in entries {
            if *i >= *j {
                return Err(Error::InvalidInput(format!(
                    "bracket entry requires i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: (*j).max(*k) + 1,
                });
            }
            let idx = (i * dim + j) * dim + k;
            let idx_t = (j * dim + i) * dim + k;
            c[idx] = c[idx].clone() + v.clone();
            c[idx_t] = c[idx_t].clone() - v.clone();
        }
        LieAlgebra::new(dim, c)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![S::zero(); dim * dim * dim],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &S {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// `[x, y]` for arbitrary coefficient vectors.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![S::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = x[i].clone() * y[j].clone();
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].clone() + coeff.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_{e_i} = [e_i, ·]` in the standard basis.
    pub fn ad_basis(&self, i: usize) -> Matrix<S> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k).clone())
    }

    /// Matrix of `ad_u` for an arbitrary vector.
    pub fn ad(&self, u: &[S]) -> Matrix<S> {
        let mut m: Matrix<S> = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] = m[(k, j)].clone() + u[i].clone() * c.clone();
                    }
                }
            }
        }
        m
    }

    /// Largest component over basis triples of
    /// `J(e_i,e_j,e_k) = [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    /// Zero exactly when the Jacobi identity holds (trilinearity extends the
    /// basis check to all vectors).
    pub fn jacobi_defect(&self) -> S {
        let mut worst = S::zero();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let jk = self.bracket_basis(j, k);
                    let ki = self.bracket_basis(k, i);
                    let ij = self.bracket_basis(i, j);
                    let t1 = self.bracket(&basis_vector(self.dim, i), &jk).unwrap();
                    let t2 = self.bracket(&basis_vector(self.dim, j), &ki).unwrap();
                    let t3 = self.bracket(&basis_vector(self.dim, k), &ij).unwrap();
                    for m in 0..self.dim {
                        let comp =
                            (t1[m].clone() + t2[m].clone() + t3[m].clone()).abs();
                        if comp > worst {
                            worst = comp;
                        }
                    }
                }
            }
        }
        worst
    }

    /// Killing form `B(u,v) = tr(ad_u ∘ ad_v)` as a symmetric matrix.
    pub fn killing_form(&self) -> Matrix<S> {
        let ads: Vec<Matrix<S>> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut b = Matrix::zeros(self.dim, self.dim);
        for u in 0..self.dim {
            for v in u..self.dim {
                let t = ads[u].mul(&ads[v]).trace();
                b[(u, v)] = t.clone();
                b[(v, u)] = t;
            }
        }
        b
    }

    /// Span of all `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace<S> {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                gens.push(self.bracket_basis(i, j));
            }
        }
        Subspace::span(self.dim, &gens)
    }

    /// Span of brackets of all basis pairs of a subspace.
    fn derived_of(&self, s: &Subspace<S>) -> Subspace<S> {
        let mut gens = Vec::new();
        let basis = s.basis();
        for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                gens.push(self.bracket(&basis[a], &basis[b]).unwrap());
            }
        }
        Subspace::span(self.dim, &gens)
    }

    /// True when the derived series reaches zero within `dim` steps.
    pub fn is_solvable(&self) -> bool {
        let mut current = self.derived_subalgebra();
        for _ in 0..=self.dim {
            if current.is_zero() {
                return true;
            }
            let next = self.derived_of(&current);
            if next.dim() == current.dim() {
                return false;
            }
            current = next;
        }
        current.is_zero()
    }

    pub fn is_ideal(&self, s: &Subspace<S>) -> Result<bool> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
            });
        }
        for i in 0..self.dim {
            let ei = basis_vector::<S>(self.dim, i);
            for b in s.basis() {
                if !s.contains(&self.bracket(&ei, b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, s: &Subspace<S>) -> Result<bool> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
            });
        }
        let basis = s.basis();
        for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                if !s.contains(&self.bracket(&basis[a], &basis[b])?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Block direct sum; cross brackets vanish.
    pub fn direct_sum(&self, other: &LieAlgebra<S>) -> LieAlgebra<S> {
        let n = self.dim + other.dim;
        let mut c = vec![S::zero(); n * n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    c[((self.dim + i) * n + (self.dim + j)) * n + (self.dim + k)] =
                        other.c(i, j, k).clone();
                }
            }
        }
        LieAlgebra {
            dim: n,
            c,
            labels: None,
        }
    }

    /// Lowers to float structure constants. The reverse direction is not
    /// provided.
    pub fn to_float(&self) -> LieAlgebra<f64> {
        LieAlgebra {
            dim: self.dim,
            c: self.c.iter().map(|x| x.to_f64()).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Trace of `ad_{e_i}` for each basis index.
    pub fn ad_traces(&self) -> Vec<S> {
        (0..self.dim).map(|i| self.ad_basis(i).trace()).collect()
    }

    /// True when every `ad_u` is traceless.
    pub fn is_unimodular(&self, tol: f64) -> bool {
        self.ad_traces()
            .iter()
            .all(|t| crate::scalar::approx_zero(t, tol))
    }
}
