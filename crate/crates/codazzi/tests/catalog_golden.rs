//! Regression locks for the catalog: structure constants and Ricci spectra
//! of the named fixtures, and the closed-form bracket table of the
//! essential-Codazzi construction transcribed independently of the family
//! builder.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use codazzi::harmonic::decompose_ricci_exact;
use codazzi::scalar::{Rat, Scalar};
use codazzi::{catalog, LieAlgebra};

fn bracket_fingerprint(alg: &LieAlgebra<Rat>) -> String {
    let mut parts = Vec::new();
    for i in 0..alg.dim() {
        for j in (i + 1)..alg.dim() {
            for k in 0..alg.dim() {
                let v = alg.c(i, j, k);
                if !v.is_zero() {
                    parts.push(format!("[{},{}]->{}e{}", i + 1, j + 1, v, k + 1));
                }
            }
        }
    }
    parts.join("; ")
}

#[test]
fn named_fixture_structure_constants_are_locked() {
    let cases: Vec<(&str, Option<usize>, &str)> = vec![
        ("abelian", Some(4), ""),
        ("heisenberg3", None, "[1,2]->1e3"),
        (
            "su2_biinvariant",
            None,
            "[1,2]->1e3; [1,3]->-1e2; [2,3]->1e1",
        ),
        ("sl2r", None, "[1,2]->1e3; [1,3]->1e2; [2,3]->1e1"),
        (
            "hyperbolic_solvable",
            Some(3),
            "[1,3]->-1e1; [2,3]->-1e2",
        ),
        (
            "su2_plus_abelian3",
            None,
            "[1,2]->1e3; [1,3]->-1e2; [2,3]->1e1",
        ),
        (
            "su2_plus_su2",
            None,
            "[1,2]->1e3; [1,3]->-1e2; [2,3]->1e1; [4,5]->1e6; [4,6]->-1e5; [5,6]->1e4",
        ),
    ];
    for (name, n, expect) in cases {
        let m = catalog::named::<Rat>(name, n).unwrap();
        assert_eq!(
            bracket_fingerprint(m.algebra()),
            expect,
            "structure constants drifted for {name}"
        );
    }
}

#[test]
fn named_fixture_ricci_spectra_are_locked() {
    let rat = |n: i64, d: i64| Rat::from_ratio(n, d);
    let cases: Vec<(&str, Option<usize>, Vec<Rat>, Vec<usize>)> = vec![
        ("abelian", Some(4), vec![rat(0, 1)], vec![4]),
        (
            "heisenberg3",
            None,
            vec![rat(-1, 2), rat(1, 2)],
            vec![2, 1],
        ),
        ("su2_biinvariant", None, vec![rat(1, 2)], vec![3]),
        ("sl2r", None, vec![rat(-3, 2), rat(1, 2)], vec![2, 1]),
        ("hyperbolic_solvable", Some(3), vec![rat(-2, 1)], vec![3]),
        ("hyperbolic_solvable", Some(4), vec![rat(-3, 1)], vec![4]),
        ("hyperbolic_solvable", Some(5), vec![rat(-4, 1)], vec![5]),
        (
            "su2_plus_abelian3",
            None,
            vec![rat(0, 1), rat(1, 2)],
            vec![3, 3],
        ),
        ("su2_plus_su2", None, vec![rat(1, 2)], vec![6]),
    ];
    for (name, n, eigenvalues, multiplicities) in cases {
        let m = catalog::named::<Rat>(name, n).unwrap();
        let dec = decompose_ricci_exact(&m).unwrap();
        assert_eq!(dec.eigenvalues(), eigenvalues, "spectrum drifted for {name}");
        assert_eq!(
            dec.multiplicities(),
            multiplicities,
            "multiplicities drifted for {name}"
        );
    }
}

/// The closed-form bracket table of the essential-Codazzi algebra,
/// transcribed term by term, independent of the family builder.
fn closed_form_table(lambda: &[Rat; 4], mu: &Rat) -> Vec<(usize, usize, usize, Rat)> {
    let l = |i: usize, j: usize| lambda[i - 1].clone() - lambda[j - 1].clone();
    let sq = |x: Rat| x.clone() * x;
    let m = mu.clone();
    vec![
        (1, 2, 4, m.clone()),
        (1, 3, 5, l(1, 3) * m.clone() / l(1, 2)),
        (1, 4, 2, -(sq(l(1, 4)) * m.clone() / sq(l(1, 2)))),
        (1, 5, 3, -(sq(l(1, 4)) * m.clone() / (l(1, 3) * l(1, 2)))),
        (2, 3, 6, l(2, 3) * m.clone() / l(1, 2)),
        (2, 4, 1, sq(l(2, 4)) * m.clone() / sq(l(1, 2))),
        (2, 6, 3, -(sq(l(2, 4)) * m.clone() / (l(2, 3) * l(1, 2)))),
        (3, 5, 1, sq(l(3, 4)) * m.clone() / (l(1, 3) * l(1, 2))),
        (3, 6, 2, sq(l(3, 4)) * m.clone() / (l(2, 3) * l(1, 2))),
        (
            4,
            5,
            6,
            sq(l(1, 4)) * m.clone() * l(2, 3) / (l(1, 3) * sq(l(1, 2))),
        ),
        (
            4,
            6,
            5,
            -(sq(l(2, 4)) * l(1, 3) * m.clone() / (sq(l(1, 2)) * l(2, 3))),
        ),
        (5, 6, 4, sq(l(3, 4)) * m / (l(1, 3) * l(2, 3))),
    ]
}

#[test]
fn family_matches_closed_form_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let mut tuples = vec![(
        [
            Rat::from_int(0),
            Rat::from_int(1),
            Rat::from_int(3),
            Rat::from_int(7),
        ],
        Rat::one(),
    )];
    while tuples.len() < 10 {
        tuples.push(catalog::random::rational_tuple(&mut rng));
    }
    for (lambda, mu) in tuples {
        let (m, _) = catalog::essential_codazzi_example(lambda.clone(), mu.clone()).unwrap();
        let alg = m.algebra();
        let mut expect = vec![Rat::zero(); 6 * 6 * 6];
        for (i, j, k, v) in closed_form_table(&lambda, &mu) {
            expect[((i - 1) * 6 + (j - 1)) * 6 + (k - 1)] = v.clone();
            expect[((j - 1) * 6 + (i - 1)) * 6 + (k - 1)] = -v;
        }
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(
                        *alg.c(i, j, k),
                        expect[(i * 6 + j) * 6 + k],
                        "bracket mismatch at ({},{},{}) for λ=({},{},{},{}), μ={}",
                        i + 1,
                        j + 1,
                        k + 1,
                        lambda[0],
                        lambda[1],
                        lambda[2],
                        lambda[3],
                        mu
                    );
                }
            }
        }
    }
}

/// The eigenspace machinery on the essential-Codazzi example: the witness
/// triple is (1,2,4) with value μ₁, the 3-dimensional eigenspace is entirely
/// hit by cross brackets, and the deformed-product checks pass for every
/// eigenvalue index.
#[test]
fn essential_codazzi_eigenspace_machinery() {
    use codazzi::harmonic::{
        decompose, deformed_product_check, nonparallel_witness, p_and_h_subspaces,
        verify_structure,
    };
    use codazzi::tol;

    let lambda = [
        Rat::from_int(0),
        Rat::from_int(1),
        Rat::from_int(3),
        Rat::from_int(7),
    ];
    let mu = Rat::from_int(2);
    let (m, a) = catalog::essential_codazzi_example(lambda, mu).unwrap();
    let dec = decompose(&m, &a, tol::EIG_CLUSTER_REL).unwrap();
    assert_eq!(dec.count(), 4);
    assert_eq!(dec.multiplicities(), vec![1, 1, 1, 3]);
    assert!(verify_structure(&m, &dec, tol::STRUCTURE).unwrap().pass);

    let w = nonparallel_witness(&m, &dec, tol::STRUCTURE).unwrap();
    assert_eq!((w.i, w.j, w.k), (1, 2, 4));
    assert!((w.value - 2.0).abs() < 1e-12, "⟨[e1,e2],e4⟩ = μ₁");

    let (p4, h4) = p_and_h_subspaces(&m, &dec, 3);
    assert_eq!(p4.dim(), 3);
    assert_eq!(h4.dim(), 0);

    for k in 0..4 {
        assert!(deformed_product_check(&m, &dec, k, tol::STRUCTURE).unwrap());
    }
}

/// Swapping two eigenvalue parameters relabels eigenspaces but preserves
/// all five certification guarantees.
#[test]
fn lambda_permutation_preserves_guarantees() {
    let base = [
        Rat::from_int(0),
        Rat::from_int(1),
        Rat::from_int(3),
        Rat::from_int(7),
    ];
    for swap in [(0usize, 1usize), (1, 2), (2, 3), (0, 3)] {
        let mut lambda = base.clone();
        lambda.swap(swap.0, swap.1);
        let (results, pass) =
            codazzi::report::run_reproduce(lambda, Rat::one()).unwrap();
        assert!(pass, "guarantees broke after swapping {swap:?}");
        assert!(results.jacobi_defect_zero);
        assert!(results.codazzi_defect_zero);
        assert!(results.nabla_norm_positive);
        assert!(results.no_eigenspace_is_ideal);
        assert!(results.killing_negative_definite);
    }
}
