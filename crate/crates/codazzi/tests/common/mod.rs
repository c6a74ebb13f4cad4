//! Brute-force oracle for the identity inner product, independent of the
//! library's linear algebra: plain nested loops over structure constants.

#![allow(clippy::needless_range_loop)]

use codazzi::{LieAlgebra, Scalar};

/// `L_{e_i}` as nested vectors, `levi[i][k][j]` = coefficient of `e_k` in
/// `L_{e_i} e_j`, straight from Koszul's formula with an orthonormal basis:
/// `L_i[k][j] = (c(i,j,k) + c(k,i,j) + c(k,j,i)) / 2`.
pub fn levi_oracle<S: Scalar>(alg: &LieAlgebra<S>) -> Vec<Vec<Vec<S>>> {
    let n = alg.dim();
    let half = S::from_ratio(1, 2);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    (0..n)
                        .map(|j| {
                            half.clone()
                                * (alg.c(i, j, k).clone()
                                    + alg.c(k, i, j).clone()
                                    + alg.c(k, j, i).clone())
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = a.len();
    let mut out = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i][j] = out[i][j].clone() + a[i][k].clone() * b[k][j].clone();
            }
        }
    }
    out
}

/// `K(e_i, e_j) = L_{[e_i,e_j]} − L_i L_j + L_j L_i` from the oracle tables.
pub fn curvature_oracle<S: Scalar>(
    alg: &LieAlgebra<S>,
    levi: &[Vec<Vec<S>>],
    i: usize,
    j: usize,
) -> Vec<Vec<S>> {
    let n = alg.dim();
    let mut out = vec![vec![S::zero(); n]; n];
    for m in 0..n {
        let coeff = alg.c(i, j, m).clone();
        if coeff.is_zero() {
            continue;
        }
        for r in 0..n {
            for c in 0..n {
                out[r][c] = out[r][c].clone() + coeff.clone() * levi[m][r][c].clone();
            }
        }
    }
    let lij = mat_mul(&levi[i], &levi[j]);
    let lji = mat_mul(&levi[j], &levi[i]);
    for r in 0..n {
        for c in 0..n {
            out[r][c] = out[r][c].clone() - lij[r][c].clone() + lji[r][c].clone();
        }
    }
    out
}

/// Ricci bilinear form by the trace definition, `ric(e_i, e_j) =
/// Σ_m [K(e_i, e_m) e_j]_m`, for the identity inner product.
pub fn ricci_oracle<S: Scalar>(alg: &LieAlgebra<S>) -> Vec<Vec<S>> {
    let n = alg.dim();
    let levi = levi_oracle(alg);
    let mut ric = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for m in 0..n {
            let k = curvature_oracle(alg, &levi, i, m);
            for j in 0..n {
                ric[i][j] = ric[i][j].clone() + k[m][j].clone();
            }
        }
    }
    ric
}
