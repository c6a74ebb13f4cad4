//! Dense linear algebra over a generic scalar, sized for dimensions up to ~10.
//!
//! Rank and kernel decisions use exact elimination in rational mode and a
//! one-sided Jacobi SVD with a relative singular-value cutoff in float mode.
//! Symmetric float eigenproblems use cyclic Jacobi rotations; both routines
//! are deterministic.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tol;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    pub fn from_cols(cols: &[Vec<S>]) -> Self {
        let c = cols.len();
        let r = if c == 0 { 0 } else { cols[0].len() };
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x.to_f64())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * s.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![S::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] = out[i].clone() + self[(i, j)].clone() * v[j].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + self[(i, i)].clone();
        }
        t
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.data
            .iter()
            .map(|x| x.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        if self.rows != self.cols {
            return false;
        }
        if S::EXACT {
            for i in 0..self.rows {
                for j in (i + 1)..self.cols {
                    if self[(i, j)] != self[(j, i)] {
                        return false;
                    }
                }
            }
            return true;
        }
        let scale = self.max_abs_f64().max(1.0);
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if (self[(i, j)].to_f64() - self[(j, i)].to_f64()).abs() > rel_tol * scale {
                    return false;
                }
            }
        }
        true
    }

    /// All off-diagonal entries exactly zero.
    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && !self[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Gauss-Jordan solve with max-abs pivoting; `None` when singular.
    pub fn solve(&self, rhs: &Matrix<S>) -> Option<Matrix<S>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let mut pivot = col;
            let mut best = a[(col, col)].abs();
            for r in (col + 1)..n {
                let v = a[(r, col)].abs();
                if v > best {
                    best = v;
                    pivot = r;
                }
            }
            if a[(pivot, col)].is_zero() {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                for j in 0..b.cols {
                    b.data.swap(pivot * b.cols + j, col * b.cols + j);
                }
            }
            let inv = S::one() / a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() * inv.clone();
            }
            for j in 0..b.cols {
                b[(col, j)] = b[(col, j)].clone() * inv.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    a[(r, j)] = a[(r, j)].clone() - f.clone() * a[(col, j)].clone();
                }
                for j in 0..b.cols {
                    b[(r, j)] = b[(r, j)].clone() - f.clone() * b[(col, j)].clone();
                }
            }
        }
        Some(b)
    }

    pub fn inverse(&self) -> Option<Matrix<S>> {
        self.solve(&Matrix::identity(self.rows))
    }

    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = S::one();
        for col in 0..n {
            let mut pivot = col;
            let mut best = a[(col, col)].abs();
            for r in (col + 1)..n {
                let v = a[(r, col)].abs();
                if v > best {
                    best = v;
                    pivot = r;
                }
            }
            if a[(pivot, col)].is_zero() {
                return S::zero();
            }
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            det = det * a[(col, col)].clone();
            let inv = S::one() / a[(col, col)].clone();
            for r in (col + 1)..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone() * inv.clone();
                for j in col..n {
                    a[(r, j)] = a[(r, j)].clone() - f.clone() * a[(col, j)].clone();
                }
            }
        }
        det
    }

    /// Row-reduced echelon form with the pivot column list.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let mut pivot = None;
            let mut best = S::zero();
            for r in rank..rows {
                let v = a[(r, col)].abs();
                if !v.is_zero() && (pivot.is_none() || v > best) {
                    best = v;
                    pivot = Some(r);
                }
            }
            let Some(p) = pivot else { continue };
            if p != rank {
                for j in 0..cols {
                    a.data.swap(p * cols + j, rank * cols + j);
                }
            }
            let inv = S::one() / a[(rank, col)].clone();
            for j in 0..cols {
                a[(rank, j)] = a[(rank, j)].clone() * inv.clone();
            }
            for r in 0..rows {
                if r == rank || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..cols {
                    a[(r, j)] = a[(r, j)].clone() - f.clone() * a[(rank, j)].clone();
                }
            }
            pivots.push(col);
            rank += 1;
        }
        (a, pivots)
    }

    /// Rank: exact elimination in rational mode, singular values in float mode.
    pub fn rank(&self) -> usize {
        if S::EXACT {
            self.rref().1.len()
        } else {
            let (sigma, _, _) = hestenes_svd(&self.to_f64());
            count_above_cutoff(&sigma)
        }
    }

    /// Basis of the null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        if S::EXACT {
            let (r, pivots) = self.rref();
            let mut basis = Vec::new();
            let pivot_set: Vec<usize> = pivots.clone();
            for free in 0..self.cols {
                if pivot_set.contains(&free) {
                    continue;
                }
                let mut v = vec![S::zero(); self.cols];
                v[free] = S::one();
                for (row, &p) in pivot_set.iter().enumerate() {
                    v[p] = -r[(row, free)].clone();
                }
                basis.push(v);
            }
            basis
        } else {
            let (sigma, _, vmat) = hestenes_svd(&self.to_f64());
            let rank = count_above_cutoff(&sigma);
            let mut basis = Vec::new();
            for j in rank..vmat.cols() {
                basis.push(vmat.col(j).iter().map(|&x| S::from_f64(x)).collect());
            }
            basis
        }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> std::fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

fn count_above_cutoff(sigma_desc: &[f64]) -> usize {
    let smax = sigma_desc.first().copied().unwrap_or(0.0);
    if smax <= 0.0 {
        return 0;
    }
    sigma_desc.iter().filter(|&&s| s > tol::RANK_REL * smax).count()
}

/// One-sided Jacobi SVD. Returns singular values in descending order,
/// left vectors (columns, unit for positive sigma) and right vectors.
pub fn hestenes_svd(a: &Matrix<f64>) -> (Vec<f64>, Matrix<f64>, Matrix<f64>) {
    let (m, n) = (a.rows(), a.cols());
    let mut u = a.clone();
    let mut v: Matrix<f64> = Matrix::identity(n);
    let eps = 1e-15;
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                for i in 0..m {
                    app += u[(i, p)] * u[(i, p)];
                    aqq += u[(i, q)] * u[(i, q)];
                    apq += u[(i, p)] * u[(i, q)];
                }
                if apq.abs() <= eps * (app * aqq).sqrt() || apq == 0.0 {
                    continue;
                }
                rotated = true;
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let up = u[(i, p)];
                    let uq = u[(i, q)];
                    u[(i, p)] = c * up - s * uq;
                    u[(i, q)] = s * up + c * uq;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = c * vp - s * vq;
                    v[(i, q)] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| u[(i, j)] * u[(i, j)]).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap().then(x.cmp(&y)));
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let mut u_sorted = Matrix::zeros(m, n);
    let mut v_sorted = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let scale = if norms[src] > 0.0 { 1.0 / norms[src] } else { 0.0 };
        for i in 0..m {
            u_sorted[(i, dst)] = u[(i, src)] * scale;
        }
        for i in 0..n {
            v_sorted[(i, dst)] = v[(i, src)];
        }
    }
    (sigma, u_sorted, v_sorted)
}

/// Cyclic Jacobi eigensolver for symmetric matrices.
/// Returns unsorted eigenvalues with eigenvectors as matching columns.
pub fn jacobi_eigen(a: &Matrix<f64>) -> (Vec<f64>, Matrix<f64>) {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut m = a.clone();
    let mut vecs: Matrix<f64> = Matrix::identity(n);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if off.sqrt() <= 1e-14 * m.max_abs_f64().max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = vecs[(k, p)];
                    let vkq = vecs[(k, q)];
                    vecs[(k, p)] = c * vkp - s * vkq;
                    vecs[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let vals = (0..n).map(|i| m[(i, i)]).collect();
    (vals, vecs)
}

pub fn dot<S: Scalar>(x: &[S], y: &[S]) -> S {
    assert_eq!(x.len(), y.len());
    let mut acc = S::zero();
    for (a, b) in x.iter().zip(y) {
        acc = acc + a.clone() * b.clone();
    }
    acc
}

pub fn inner<S: Scalar>(gram: &Matrix<S>, x: &[S], y: &[S]) -> S {
    dot(&gram.mat_vec(y), x)
}

pub fn axpy<S: Scalar>(out: &mut [S], coeff: &S, v: &[S]) {
    for (o, x) in out.iter_mut().zip(v) {
        *o = o.clone() + coeff.clone() * x.clone();
    }
}

pub fn vec_sub<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    x.iter()
        .zip(y)
        .map(|(a, b)| a.clone() - b.clone())
        .collect()
}

pub fn vec_scale<S: Scalar>(c: &S, x: &[S]) -> Vec<S> {
    x.iter().map(|a| c.clone() * a.clone()).collect()
}

pub fn basis_vector<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

/// Gram-Schmidt frame for an inner product. The frame is orthonormal in
/// float mode (with one re-orthogonalization pass) and orthogonal with
/// recorded squared lengths in exact mode.
pub fn gram_frame<S: Scalar>(gram: &Matrix<S>) -> Result<(Vec<Vec<S>>, Vec<S>)> {
    let n = gram.rows();
    let mut frame: Vec<Vec<S>> = Vec::with_capacity(n);
    let mut len_sq: Vec<S> = Vec::with_capacity(n);
    for i in 0..n {
        let mut f = basis_vector::<S>(n, i);
        let passes = if S::EXACT { 1 } else { 2 };
        for _ in 0..passes {
            for j in 0..frame.len() {
                let c = inner(gram, &f, &frame[j]) / len_sq[j].clone();
                let proj = vec_scale(&c, &frame[j]);
                f = vec_sub(&f, &proj);
            }
        }
        let mut s = inner(gram, &f, &f);
        if S::EXACT {
            if s.is_zero() {
                return Err(Error::NotPositiveDefinite);
            }
        } else {
            if s.to_f64() <= tol::POS_DEF_MIN {
                return Err(Error::NotPositiveDefinite);
            }
            let norm = s.sqrt().expect("nonnegative");
            f = vec_scale(&(S::one() / norm), &f);
            s = S::one();
        }
        frame.push(f);
        len_sq.push(s);
    }
    Ok((frame, len_sq))
}

/// Euclidean orthonormalization of a float vector set (drops dependent vectors).
fn euclid_orthonormalize(vecs: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in vecs {
        let mut f = v.clone();
        for _ in 0..2 {
            for b in &out {
                let c = dot(&f, b);
                for (x, y) in f.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
        }
        let norm = dot(&f, &f).sqrt();
        let scale = dot(v, v).sqrt().max(1.0);
        if norm > tol::RANK_REL * scale {
            out.push(f.iter().map(|x| x / norm).collect());
        }
    }
    out
}

/// A linear subspace with an explicit independent basis.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    /// Span of an arbitrary set of vectors, reduced to an independent basis.
    pub fn span(ambient: usize, vecs: &[Vec<S>]) -> Self {
        for v in vecs {
            assert_eq!(v.len(), ambient);
        }
        if S::EXACT {
            let m = Matrix::from_rows(vecs);
            if vecs.is_empty() {
                return Subspace {
                    ambient,
                    basis: Vec::new(),
                };
            }
            let (r, pivots) = m.rref();
            let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
            Subspace { ambient, basis }
        } else {
            let fv: Vec<Vec<f64>> = vecs
                .iter()
                .map(|v| v.iter().map(|x| x.to_f64()).collect())
                .collect();
            // independent directions via singular vectors of the column matrix
            let m = Matrix::from_cols(&fv);
            if fv.is_empty() {
                return Subspace {
                    ambient,
                    basis: Vec::new(),
                };
            }
            let (sigma, u, _) = hestenes_svd(&m);
            let rank = count_above_cutoff(&sigma);
            let basis = (0..rank)
                .map(|j| u.col(j).iter().map(|&x| S::from_f64(x)).collect())
                .collect();
            Subspace { ambient, basis }
        }
    }

    /// Wraps vectors the caller guarantees to be linearly independent.
    pub fn from_independent(ambient: usize, basis: Vec<Vec<S>>) -> Self {
        for v in &basis {
            assert_eq!(v.len(), ambient);
        }
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| basis_vector(ambient, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if S::EXACT {
            if self.basis.is_empty() {
                return v.iter().all(|x| x.is_zero());
            }
            let a = Matrix::from_cols(&self.basis);
            let stacked = Matrix::from_cols(&[self.basis.clone(), vec![v.to_vec()]].concat());
            a.rank() == stacked.rank()
        } else {
            let fv: Vec<f64> = v.iter().map(|x| x.to_f64()).collect();
            let fb: Vec<Vec<f64>> = self
                .basis
                .iter()
                .map(|b| b.iter().map(|x| x.to_f64()).collect())
                .collect();
            let on = euclid_orthonormalize(&fb);
            let mut res = fv.clone();
            for b in &on {
                let c = dot(&res, b);
                for (x, y) in res.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
            let vnorm = dot(&fv, &fv).sqrt();
            dot(&res, &res).sqrt() <= tol::MEMBERSHIP * (1.0 + vnorm)
        }
    }

    /// Whether the subspace equals another as a set.
    pub fn same_span(&self, other: &Subspace<S>) -> bool {
        self.dim() == other.dim() && other.basis.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn rat(n: i64, d: i64) -> Rat {
        <Rat as Scalar>::from_ratio(n, d)
    }

    #[test]
    fn exact_inverse_round_trip() {
        let a = Matrix::from_fn(3, 3, |i, j| {
            if i == j {
                rat(2, 1)
            } else {
                rat(1, (i + j + 1) as i64)
            }
        });
        let inv = a.inverse().unwrap();
        let prod = a.mul(&inv);
        assert_eq!(prod, Matrix::identity(3));
    }

    #[test]
    fn exact_rank_and_kernel() {
        // rows: (1,2,3), (2,4,6) -> rank 1, kernel dim 2
        let a = Matrix::from_rows(&[
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
        ]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let out = a.mat_vec(v);
            assert!(out.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn float_svd_rank() {
        let a: Matrix<f64> = Matrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 6.0],
            vec![0.0, 0.0, 1e-14],
        ]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn jacobi_eigen_simple() {
        let a: Matrix<f64> = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let (mut vals, vecs) = jacobi_eigen(&a);
        vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
        // residual check
        let (vals2, _) = jacobi_eigen(&a);
        for (j, &lambda) in vals2.iter().enumerate() {
            let v = vecs.col(j);
            let av = a.mat_vec(&v);
            let lv: Vec<f64> = v.iter().map(|x| x * vals2[j]).collect();
            let _ = lambda;
            for (x, y) in av.iter().zip(&lv) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn frame_is_gram_orthogonal() {
        let gram = Matrix::from_rows(&[
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(3, 1)],
        ]);
        let (frame, len_sq) = gram_frame(&gram).unwrap();
        assert_eq!(frame.len(), 2);
        let ip = inner(&gram, &frame[0], &frame[1]);
        assert!(ip.is_zero());
        assert_eq!(inner(&gram, &frame[0], &frame[0]), len_sq[0]);
    }

    #[test]
    fn float_frame_is_orthonormal() {
        let gram: Matrix<f64> =
            Matrix::from_rows(&[vec![2.0, 0.5, 0.0], vec![0.5, 1.0, 0.2], vec![0.0, 0.2, 3.0]]);
        let (frame, len_sq) = gram_frame(&gram).unwrap();
        for i in 0..3 {
            assert!((len_sq[i] - 1.0).abs() < 1e-15);
            for j in 0..3 {
                let ip = inner(&gram, &frame[i], &frame[j]);
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((ip - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn subspace_membership() {
        let s = Subspace::span(
            3,
            &[vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 0.0], vec![1.0, 1.0, 1.0]],
        );
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[2.0, -1.0, 2.0]));
        assert!(!s.contains(&[0.0, 0.0, 1.0]));
    }
}
