//! Validates the bundled Hopf algebras and their duals, then shows a witness for a
//! broken one.

use gcenter::catalog::{ks3, kz3, sweedler};
use gcenter::hopfcore::{dual_cop, validate_hopf, HopfAlgebra};
use gcenter::Scalar;

fn main() {
    for h in [kz3(), ks3(), sweedler()] {
        let r = validate_hopf(&h);
        let d = dual_cop(&h).expect("antipode present");
        println!("{:<8} dim {:>2}: {} checks, dual: {}", h.name(), h.dim(), r.len(), validate_hopf(&d).passed());
    }

    // Sweedler's algebra with x·x = 1 instead of 0.
    let h = sweedler();
    let x = h.index_of("x").unwrap();
    let mut mult = h.mult().clone();
    mult.set(h.index_of("1").unwrap(), x * h.dim() + x, Scalar::one());
    let broken = HopfAlgebra::new("broken", h.labels().to_vec(), mult, h.unit().clone(), h.comult().clone(), h.counit().clone(), h.antipode().cloned())
        .expect("shapes are fine");
    print!("{}", validate_hopf(&broken).failures().take(3).map(|f| format!("{f}\n")).collect::<String>());
}
