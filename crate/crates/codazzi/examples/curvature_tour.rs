//! Tour of the basic geometry: Levi-Civita product, curvature, Ricci
//! operator (by both routes), scalar curvature and mean curvature on a few
//! catalog fixtures.
//!
//! ```bash
//! cargo run -p codazzi --example curvature_tour
//! ```

use codazzi::linalg::basis_vector;
use codazzi::scalar::Rat;
use codazzi::{catalog, Scalar};

fn main() {
    for (name, n) in [
        ("su2_biinvariant", None),
        ("heisenberg3", None),
        ("hyperbolic_solvable", Some(4)),
        ("sl2r", None),
    ] {
        let m = catalog::named::<Rat>(name, n).unwrap();
        let dim = m.dim();
        println!("== {name} (dim {dim}) ==");

        let e1 = basis_vector::<Rat>(dim, 0);
        let l1 = m.levi_civita(&e1);
        println!("L_e1 column images:");
        for j in 0..dim {
            let col = l1.col(j);
            let terms: Vec<String> = col
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| format!("{v}·e{}", k + 1))
                .collect();
            println!("  L_e1 e{} = {}", j + 1, if terms.is_empty() { "0".into() } else { terms.join(" + ") });
        }

        let ric = m.ricci();
        let ric2 = m.ricci_structure_formula();
        println!(
            "Ricci diagonal: {:?}",
            (0..dim).map(|i| ric.matrix()[(i, i)].to_string()).collect::<Vec<_>>()
        );
        println!(
            "two Ricci routes agree exactly: {}",
            ric.matrix() == ric2.matrix()
        );
        println!("scalar curvature: {}", m.scalar_curvature());
        let h = m.mean_curvature_vector();
        println!(
            "mean curvature vector: [{}]  (zero iff unimodular)",
            h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        );
        println!();
    }
}
