//! Named metric Lie algebras, the six-dimensional bracket family with three
//! 1-dimensional eigenvalue lines acting on a 3-dimensional block, and the
//! essential-Codazzi instance of that family, plus random generators for
//! sweeps.

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{MetricLieAlgebra, SymmetricOperator};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::LieAlgebra;

/// Names accepted by [`named`], in catalog order.
pub const NAMED: &[&str] = &[
    "abelian",
    "heisenberg3",
    "su2_biinvariant",
    "sl2r",
    "hyperbolic_solvable",
    "su2_plus_abelian3",
    "su2_plus_su2",
];

fn su2<S: Scalar>() -> LieAlgebra<S> {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, 2, S::one()),
            (1, 2, 0, S::one()),
            (0, 2, 1, -S::one()),
        ],
    )
    .expect("valid brackets")
}

fn sl2r<S: Scalar>() -> LieAlgebra<S> {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, 2, S::one()),
            (1, 2, 0, S::one()),
            (0, 2, 1, S::one()),
        ],
    )
    .expect("valid brackets")
}

fn heisenberg3<S: Scalar>() -> LieAlgebra<S> {
    LieAlgebra::from_brackets(3, &[(0, 1, 2, S::one())]).expect("valid brackets")
}

/// `[H, e_i] = e_i` for `i < n-1`, with `H = e_n`.
fn hyperbolic_solvable<S: Scalar>(n: usize) -> LieAlgebra<S> {
    let entries: Vec<(usize, usize, usize, S)> =
        (0..n - 1).map(|i| (i, n - 1, i, -S::one())).collect();
    LieAlgebra::from_brackets(n, &entries).expect("valid brackets")
}

/// Catalog lookup. `n` is required for `abelian` and `hyperbolic_solvable`
/// and ignored elsewhere. Every fixture carries the identity inner product.
pub fn named<S: Scalar>(name: &str, n: Option<usize>) -> Result<MetricLieAlgebra<S>> {
    let alg: LieAlgebra<S> = match name {
        "abelian" => {
            let n = n.ok_or(Error::MissingDimension("abelian"))?;
            if n == 0 {
                return Err(Error::InvalidInput("dimension must be positive".into()));
            }
            LieAlgebra::abelian(n)
        }
        "heisenberg3" => heisenberg3(),
        "su2_biinvariant" => su2(),
        "sl2r" => sl2r(),
        "hyperbolic_solvable" => {
            let n = n.ok_or(Error::MissingDimension("hyperbolic_solvable"))?;
            if n < 2 {
                return Err(Error::InvalidInput(
                    "hyperbolic_solvable needs dimension >= 2".into(),
                ));
            }
            hyperbolic_solvable(n)
        }
        "su2_plus_abelian3" => su2().direct_sum(&LieAlgebra::abelian(3)),
        "su2_plus_su2" => su2().direct_sum(&su2()),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    MetricLieAlgebra::euclidean(alg)
}

/// Parameters of the six-dimensional bracket family: eigenvalue lines
/// `λ₁, λ₂, λ₃` of dimension one, a 3-dimensional block with eigenvalue
/// `λ₄`, bracket weights `μ`, rotation weights `α`, the mixing weight `r`,
/// and the block coefficients `a, b, c`.
#[derive(Clone, Debug)]
pub struct FamilyParameters<S> {
    pub lambda: [S; 4],
    pub mu: [S; 3],
    pub alpha: [S; 3],
    pub r: S,
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> FamilyParameters<S> {
    pub fn validate(&self) -> Result<()> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.lambda[i] == self.lambda[j] {
                    return Err(Error::CoincidentEigenvalues);
                }
            }
        }
        Ok(())
    }

    /// The canonical regime: `λ₁ < λ₂ < λ₃` and positive `μ`.
    pub fn is_canonical(&self) -> bool {
        self.lambda[0] < self.lambda[1]
            && self.lambda[1] < self.lambda[2]
            && self.mu.iter().all(|m| *m > S::zero())
    }
}

fn lam_diff<S: Scalar>(lambda: &[S; 4], i: usize, j: usize) -> S {
    lambda[i].clone() - lambda[j].clone()
}

/// The full bracket family. The Jacobi identity is *not* guaranteed; testing
/// which parameters satisfy it is the point.
pub fn general_family<S: Scalar>(p: &FamilyParameters<S>) -> Result<LieAlgebra<S>> {
    p.validate()?;
    let l = &p.lambda;
    let sq = |x: S| x.clone() * x;
    let l12 = lam_diff(l, 0, 1);
    let l13 = lam_diff(l, 0, 2);
    let l23 = lam_diff(l, 1, 2);
    let l14 = lam_diff(l, 0, 3);
    let l24 = lam_diff(l, 1, 3);
    let l34 = lam_diff(l, 2, 3);
    let entries = vec![
        // 3-dimensional block
        (3, 4, 5, p.a.clone()),
        (3, 5, 4, p.b.clone()),
        (4, 5, 3, p.c.clone()),
        // brackets among the lines
        (0, 1, 3, p.mu[0].clone()),
        (0, 1, 2, sq(l12.clone()) / sq(l23.clone()) * p.r.clone()),
        (0, 2, 4, p.mu[1].clone()),
        (0, 2, 1, -(sq(l13.clone()) / sq(l23.clone()) * p.r.clone())),
        (1, 2, 5, p.mu[2].clone()),
        (1, 2, 0, p.r.clone()),
        // lines acting on the block
        (0, 3, 4, p.alpha[0].clone()),
        (0, 3, 1, -(sq(l14.clone()) / sq(l12.clone()) * p.mu[0].clone())),
        (0, 4, 3, -p.alpha[0].clone()),
        (0, 4, 2, -(sq(l14) / sq(l13.clone()) * p.mu[1].clone())),
        (1, 3, 5, p.alpha[1].clone()),
        (1, 3, 0, sq(l24.clone()) / sq(l12.clone()) * p.mu[0].clone()),
        (1, 5, 3, -p.alpha[1].clone()),
        (1, 5, 2, -(sq(l24) / sq(l23.clone()) * p.mu[2].clone())),
        (2, 4, 5, p.alpha[2].clone()),
        (2, 4, 0, sq(l34.clone()) / sq(l13) * p.mu[1].clone()),
        (2, 5, 4, -p.alpha[2].clone()),
        (2, 5, 1, sq(l34) / sq(l23) * p.mu[2].clone()),
    ];
    LieAlgebra::from_brackets(6, &entries)
}

/// Parameter values forced by the Jacobi identity once `α = r = 0`:
/// `μ₂, μ₃` and the block coefficients become functions of `λ` and `μ₁`.
pub fn forced_parameters<S: Scalar>(lambda: [S; 4], mu1: S) -> FamilyParameters<S> {
    let sq = |x: S| x.clone() * x;
    let l12 = lambda[0].clone() - lambda[1].clone();
    let l13 = lambda[0].clone() - lambda[2].clone();
    let l23 = lambda[1].clone() - lambda[2].clone();
    let l14 = lambda[0].clone() - lambda[3].clone();
    let l24 = lambda[1].clone() - lambda[3].clone();
    let l34 = lambda[2].clone() - lambda[3].clone();
    let mu2 = l13.clone() * mu1.clone() / l12.clone();
    let mu3 = l23.clone() * mu1.clone() / l12.clone();
    let a = sq(l14) * l23.clone() * mu1.clone() / (sq(l12.clone()) * l13.clone());
    let b = -(sq(l24) * l13.clone() * mu1.clone() / (sq(l12) * l23.clone()));
    let c = sq(l34) * mu1.clone() / (l23 * l13);
    FamilyParameters {
        lambda,
        mu: [mu1, mu2, mu3],
        alpha: [S::zero(), S::zero(), S::zero()],
        r: S::zero(),
        a,
        b,
        c,
    }
}

/// The essential-Codazzi instance: for pairwise distinct `λ` and `μ₁ ≠ 0`
/// this is a Lie algebra (Jacobi holds identically) carrying
/// `A = Diag(λ₁, λ₂, λ₃, λ₄, λ₄, λ₄)` as a Codazzi tensor that is not
/// parallel and none of whose eigenspace subalgebras is an ideal; its
/// Killing form is negative definite.
pub fn essential_codazzi_example<S: Scalar>(
    lambda: [S; 4],
    mu1: S,
) -> Result<(MetricLieAlgebra<S>, SymmetricOperator<S>)> {
    if mu1.is_zero() {
        return Err(Error::ZeroParameter("mu1"));
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if lambda[i] == lambda[j] {
                return Err(Error::CoincidentEigenvalues);
            }
        }
    }
    let params = forced_parameters(lambda.clone(), mu1);
    let alg = general_family(&params)?;
    let metric = MetricLieAlgebra::new(alg, Matrix::identity(6))?;
    let a = SymmetricOperator::diagonal(&[
        lambda[0].clone(),
        lambda[1].clone(),
        lambda[2].clone(),
        lambda[3].clone(),
        lambda[3].clone(),
        lambda[3].clone(),
    ]);
    Ok((metric, a))
}

/// Deterministic random instances for sweeps and property tests.
pub mod random {
    use super::*;

    /// Random solvable Lie algebra with exactly vanishing Jacobi defect.
    /// Mixes almost-abelian algebras (an abelian ideal plus one generator
    /// acting by an arbitrary matrix), two-step nilpotent algebras, and
    /// direct sums of smaller solvable pieces.
    pub fn solvable_algebra<R: Rng>(dim: usize, rng: &mut R) -> LieAlgebra<f64> {
        assert!(dim >= 1);
        if dim == 1 {
            return LieAlgebra::abelian(1);
        }
        match rng.gen_range(0..4u8) {
            0 => almost_abelian(dim, rng),
            1 if dim >= 3 => two_step_nilpotent(dim, rng),
            2 if dim >= 4 => {
                let left = rng.gen_range(1..dim);
                let a = solvable_algebra(left, rng);
                let b = solvable_algebra(dim - left, rng);
                a.direct_sum(&b)
            }
            _ => almost_abelian(dim, rng),
        }
    }

    /// Abelian ideal spanned by `e_1..e_{n-1}` with `[e_n, e_i] = D e_i`.
    pub fn almost_abelian<R: Rng>(dim: usize, rng: &mut R) -> LieAlgebra<f64> {
        let mut entries = Vec::new();
        for i in 0..dim - 1 {
            for k in 0..dim - 1 {
                let v: f64 = rng.gen_range(-1.0..1.0);
                // [e_i, e_n] = -D e_i
                entries.push((i, dim - 1, k, -v));
            }
        }
        LieAlgebra::from_brackets(dim, &entries).expect("valid brackets")
    }

    /// `[V, V] ⊆ Z` with `Z` central: the Jacobi identity holds identically.
    pub fn two_step_nilpotent<R: Rng>(dim: usize, rng: &mut R) -> LieAlgebra<f64> {
        let z = rng.gen_range(1..=(dim - 2).max(1));
        let v = dim - z;
        let mut entries = Vec::new();
        for i in 0..v {
            for j in (i + 1)..v {
                for k in 0..z {
                    entries.push((i, j, v + k, rng.gen_range(-1.0..1.0)));
                }
            }
        }
        LieAlgebra::from_brackets(dim, &entries).expect("valid brackets")
    }

    /// Random Lie algebra that may be non-solvable: a compact simple block
    /// direct-summed with a random solvable piece, or a plain solvable one.
    pub fn algebra<R: Rng>(dim: usize, rng: &mut R) -> LieAlgebra<f64> {
        if dim >= 3 && rng.gen_bool(0.3) {
            let scale: f64 = rng.gen_range(0.3..1.5);
            let block = LieAlgebra::from_brackets(
                3,
                &[
                    (0, 1, 2, scale),
                    (1, 2, 0, scale),
                    (0, 2, 1, -scale),
                ],
            )
            .expect("valid brackets");
            if dim == 3 {
                block
            } else {
                block.direct_sum(&solvable_algebra(dim - 3, rng))
            }
        } else {
            solvable_algebra(dim, rng)
        }
    }

    /// Random positive-definite Gram matrix `F Fᵀ` with log-uniform diagonal.
    pub fn gram<R: Rng>(dim: usize, rng: &mut R) -> Matrix<f64> {
        let mut f: Matrix<f64> = Matrix::zeros(dim, dim);
        for i in 0..dim {
            f[(i, i)] = rng.gen_range(-0.8..0.8f64).exp();
            for j in 0..i {
                f[(i, j)] = rng.gen_range(-0.8..0.8);
            }
        }
        f.mul(&f.transpose())
    }

    /// Random admissible rational tuple `(λ₁..λ₄, μ₁)`: pairwise distinct
    /// `λ` with small numerators and denominators, nonzero `μ₁`.
    pub fn rational_tuple<R: Rng>(rng: &mut R) -> ([crate::Rat; 4], crate::Rat) {
        use crate::Rat;
        loop {
            let lam: Vec<Rat> = (0..4)
                .map(|_| {
                    Rat::from_ratio(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=4))
                })
                .collect();
            let distinct = (0..4).all(|i| (i + 1..4).all(|j| lam[i] != lam[j]));
            if !distinct {
                continue;
            }
            let mut mu = Rat::from_ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=3));
            if mu.is_zero() {
                mu = Rat::one();
            }
            return ([lam[0].clone(), lam[1].clone(), lam[2].clone(), lam[3].clone()], mu);
        }
    }
}
