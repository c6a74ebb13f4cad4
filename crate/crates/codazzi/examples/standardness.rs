//! Standardness of solvable metric algebras: when the Ricci operator is
//! scalar on the derived subalgebra, the orthogonal complement of the
//! derived subalgebra must be abelian, and for non-unimodular algebras the
//! scalar is pinned by the mean-curvature vector.
//!
//! ```bash
//! cargo run -p codazzi --example standardness
//! ```

use codazzi::harmonic::standardness_check;
use codazzi::scalar::Rat;
use codazzi::catalog;

fn main() {
    for (name, n) in [
        ("abelian", Some(4)),
        ("heisenberg3", None),
        ("hyperbolic_solvable", Some(3)),
        ("hyperbolic_solvable", Some(5)),
    ] {
        let m = catalog::named::<Rat>(name, n).unwrap();
        let rep = standardness_check(&m, 1e-9).unwrap();
        println!("== {name} ==");
        println!("  derived subalgebra dimension: {}", rep.derived_dim);
        println!("  unimodular: {}", rep.unimodular);
        println!(
            "  Ric scalar on derived: {} (c = {:?}{})",
            rep.ric_scalar_on_derived,
            rep.c,
            if rep.hypothesis_vacuous {
                ", vacuous: derived dim <= 1"
            } else {
                ""
            }
        );
        println!("  complement abelian: {}", rep.complement_abelian);
        if let Some(resid) = rep.c_crosscheck_residual {
            println!("  c cross-check residual vs -tr(S²)/tr(S): {resid:e}");
        }
        println!("  theorem violation flag: {}", rep.theorem_violation);
        println!();
    }
    // non-solvable inputs are rejected
    let su2 = catalog::named::<Rat>("su2_biinvariant", None).unwrap();
    println!(
        "su2 (not solvable) -> {:?}",
        standardness_check(&su2, 1e-9).err().unwrap().to_string()
    );
}
