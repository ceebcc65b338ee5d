//! Comonoidal automorphisms of Sweedler's algebra and their star composition.

use gcenter::autoact::{conjugate_by, star_compose, validate_comonoidal_automorphism};
use gcenter::catalog::{sweedler, sweedler_scaling};
use gcenter::Scalar;

fn main() {
    let h = sweedler();
    let flip = sweedler_scaling(&h, Scalar::int(-1));
    let one_plus_x = vec![Scalar::one(), Scalar::zero(), Scalar::one(), Scalar::zero()];
    let twisted = conjugate_by(&flip, &one_plus_x).expect("1 + x is invertible");
    let terms: Vec<String> = h
        .terms2(twisted.f2())
        .into_iter()
        .map(|(a, b, c)| if c.is_one() { format!("{}⊗{}", h.label(a), h.label(b)) } else { format!("{c}*{}⊗{}", h.label(a), h.label(b)) })
        .collect();
    println!("f2 of the conjugated flip: {}", terms.join(" + "));

    let square = star_compose(&twisted, &twisted).expect("same algebra");
    let r = validate_comonoidal_automorphism(&square);
    println!("star square: {} checks pass, identity map: {}", r.passed(), square.map().is_identity());
    println!("square:\n{}", square.map());
}
