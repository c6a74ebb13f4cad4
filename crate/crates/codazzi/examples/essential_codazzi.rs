//! The six-dimensional essential Codazzi tensor, certified in exact
//! rational arithmetic: a compact Lie algebra (negative-definite Killing
//! form) with a diagonal self-adjoint operator that satisfies the Codazzi
//! equation, is not parallel, and none of whose eigenspace subalgebras is an
//! ideal.
//!
//! ```bash
//! cargo run -p codazzi --example essential_codazzi
//! ```

use codazzi::harmonic::{decompose, nonparallel_witness, verify_structure};
use codazzi::scalar::{Rat, Scalar};
use codazzi::{catalog, tol};

fn main() {
    let lambda = [
        Rat::from_int(0),
        Rat::from_int(1),
        Rat::from_int(3),
        Rat::from_int(7),
    ];
    let mu = Rat::one();
    let (m, a) = catalog::essential_codazzi_example(lambda, mu).unwrap();

    println!("bracket table (non-vanishing, exact):");
    let alg = m.algebra();
    for i in 0..6 {
        for j in (i + 1)..6 {
            let br = alg.bracket_basis(i, j);
            let terms: Vec<String> = br
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| format!("{v}·e{}", k + 1))
                .collect();
            if !terms.is_empty() {
                println!("  [e{}, e{}] = {}", i + 1, j + 1, terms.join(" + "));
            }
        }
    }

    println!("\nJacobi defect (exact): {}", alg.jacobi_defect());
    let defect = m.codazzi_defect(&a);
    println!("Codazzi defect of A = Diag(0,1,3,7,7,7): {}", defect.norm_sq);
    println!("∇A norm² (must be positive): {}", m.nabla_norm_sq(&a));

    let dec = decompose(&m, &a, tol::EIG_CLUSTER_REL).unwrap();
    let report = verify_structure(&m, &dec, tol::STRUCTURE).unwrap();
    println!("structure conditions pass: {}", report.pass);

    for (idx, space) in dec.eigenspaces().iter().enumerate() {
        println!(
            "eigenspace g_{} (dim {}): subalgebra {} / ideal {}",
            idx + 1,
            space.dim(),
            alg.is_subalgebra(space).unwrap(),
            alg.is_ideal(space).unwrap(),
        );
    }

    if let Some(w) = nonparallel_witness(&m, &dec, tol::STRUCTURE) {
        println!(
            "non-parallel witness: eigenspaces ({},{},{}) with ⟨[u,v],w⟩ = {}",
            w.i, w.j, w.k, w.value
        );
    }

    let killing = alg.killing_form();
    println!(
        "Killing form diagonal: {:?}",
        (0..6).map(|i| killing[(i, i)].to_string()).collect::<Vec<_>>()
    );
    println!("(negative definite, so the algebra is compact)");
}
