//! Twisted Yetter-Drinfeld modules: the adjoint module, its half-braiding and the
//! way back to the coaction.

use gcenter::catalog::{sweedler, sweedler_scaling};
use gcenter::hopfcore::regular_module;
use gcenter::ydmod::{coaction_from_half_braiding, half_braiding, trivial_yd, twisted_adjoint, validate_yd};
use gcenter::Scalar;
use std::sync::Arc;

fn main() {
    let h = sweedler();
    let flip = Arc::new(sweedler_scaling(&h, Scalar::int(-1)));
    let ad = twisted_adjoint(flip.clone()).expect("antipode present");
    println!("twisted adjoint: {} checks pass", validate_yd(&ad).passed());

    let gamma = half_braiding(&ad, &regular_module(&h));
    let back = coaction_from_half_braiding(flip.clone(), ad.module(), &gamma, None).unwrap();
    println!("coaction recovered from the half-braiding: {}", back.coaction() == ad.coaction());

    let r = validate_yd(&trivial_yd(flip));
    println!("trivial module under the flip fails {} checks, first: {}", r.failed(), r.failures().next().unwrap());
}
