//! A nonstrict action from an extension of groups, with a compositor that is not
//! the identity.

use gcenter::autoact::validate_action;
use gcenter::catalog::intro_z4;
use gcenter::eqcenter::{compositor, CenterObject};
use gcenter::hopfcore::regular_module;
use gcenter::ydmod::YDModule;
use gcenter::{Mat, Scalar};

fn main() {
    let a = intro_z4();
    println!("{}: {} checks pass, strict: {}", a.name(), validate_action(&a).passed(), a.is_strict());
    let g = a.group().index_of("1").unwrap();
    println!("b(1,1) = {}", a.hopf().format_element(a.b(g, g)));

    // k[Z/2] acting on itself, with the trivial coaction.
    let h = a.hopf();
    let n = h.dim();
    let coaction = Mat::from_fn(n * n, n, |r, x| if r == x { Scalar::one() } else { Scalar::zero() });
    let e = a.group().identity();
    let reg = YDModule::new("reg", a.auto(e).clone(), None, regular_module(h), coaction).unwrap();
    let x = CenterObject::new(&a, e, reg).unwrap();
    let c = compositor(&a, g, g, &x).unwrap();
    println!("compositor at (1, 1) on {}:\n{}", x.name(), c.map);
}
