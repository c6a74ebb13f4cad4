//! Ricci eigenspace machinery: decomposition, the bracket-image subspaces
//! p_i and their complements h_i, the deformed product check, and the
//! restriction identities relating ambient and eigenspace-intrinsic Ricci
//! curvature.
//!
//! ```bash
//! cargo run -p codazzi --example ricci_decomposition
//! ```

use codazzi::harmonic::{
    decompose, deformed_product_check, p_and_h_subspaces, restriction_identity_residuals,
    verify_structure,
};
use codazzi::scalar::{Rat, Scalar};
use codazzi::{catalog, tol};

fn main() {
    let m = catalog::named::<Rat>("su2_plus_abelian3", None).unwrap();
    let ric = m.ricci();
    let dec = decompose(&m, &ric, tol::EIG_CLUSTER_REL).unwrap();

    println!("su2 ⊕ abelian(3) with the identity metric");
    for (lambda, space) in dec.eigenvalues().iter().zip(dec.eigenspaces()) {
        println!("  eigenvalue {lambda} with multiplicity {}", space.dim());
    }

    let report = verify_structure(&m, &dec, tol::STRUCTURE).unwrap();
    println!("structure conditions pass: {}", report.pass);

    for i in 0..dec.count() {
        let (p, h) = p_and_h_subspaces(&m, &dec, i);
        println!(
            "  g_{}: dim p = {}, dim h = {} (p collects cross-bracket images)",
            i + 1,
            p.dim(),
            h.dim()
        );
        let deformed = deformed_product_check(&m, &dec, i, tol::STRUCTURE).unwrap();
        println!("  deformed product + skew representation check: {deformed}");
    }

    let (r1, r2) = restriction_identity_residuals(&m, &dec).unwrap();
    println!("restriction identity residual (eigenspace Ricci): {r1}");
    println!("scalar curvature splitting residual: {r2}");

    // contrast: the essential Codazzi example has p_4 equal to ALL of g_4
    let (m, a) = catalog::essential_codazzi_example(
        [
            Rat::from_int(0),
            Rat::from_int(1),
            Rat::from_int(3),
            Rat::from_int(7),
        ],
        Rat::from_int(1),
    )
    .unwrap();
    let dec = decompose(&m, &a, tol::EIG_CLUSTER_REL).unwrap();
    let (p4, h4) = p_and_h_subspaces(&m, &dec, 3);
    println!("\nessential Codazzi example, 3-dimensional eigenspace g_4:");
    println!("  dim p_4 = {} (all of g_4), dim h_4 = {}", p4.dim(), h4.dim());
}
