//! The JSON interchange formats: write an algebra file, read it back, and
//! run a check on it — the same formats the `codazzi` binary consumes.
//!
//! ```bash
//! cargo run -p codazzi --example json_io
//! ```

use codazzi::io::{self, AnyAlgebra};
use codazzi::report::{run_check, Tolerances};
use codazzi::scalar::Rat;
use codazzi::catalog;

fn main() {
    let alg = catalog::named::<Rat>("heisenberg3", None)
        .unwrap()
        .algebra()
        .clone();
    let file = io::algebra_to_file(&alg);
    let text = serde_json::to_string_pretty(&file).unwrap();
    println!("algebra file:\n{text}\n");

    let parsed = io::parse_algebra(&text).unwrap();
    println!("parsed back: dim {} in {} mode", parsed.dim(), parsed.field());

    let AnyAlgebra::Rational(alg) = parsed else {
        unreachable!("file declared rational mode");
    };
    let (results, pass) = run_check(alg, None, None, &Tolerances::default()).unwrap();
    println!("\ncheck pass: {pass}");
    println!("codazzi defect norm: {}", results.codazzi_defect_norm);
    println!("divergence norm:     {}", results.divergence_norm);
    println!(
        "structure condition 1 flags: {:?}",
        results
            .structure
            .as_ref()
            .unwrap()
            .subalgebra
            .iter()
            .map(|c| c.ok)
            .collect::<Vec<_>>()
    );
}
