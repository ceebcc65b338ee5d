//! The twisted double of Sweedler's algebra and the passage between its modules and
//! twisted Yetter-Drinfeld modules.

use std::sync::Arc;

use gcenter::catalog::{sweedler, sweedler_scaling};
use gcenter::gdouble::{canonical_ev_pairing, double_module_to_yd, validate_double, validate_pairing, yd_to_double_module, DoubleAlgebra, DoubleModule};
use gcenter::ydmod::validate_yd;
use gcenter::Scalar;

fn main() {
    let h = sweedler();
    println!("pairing: {} checks pass", validate_pairing(&canonical_ev_pairing(&h).unwrap()).passed());
    let d = Arc::new(DoubleAlgebra::from_twist(Arc::new(sweedler_scaling(&h, Scalar::int(-1)))).unwrap());
    println!("double of dim {}: {} checks pass", d.dim(), validate_double(&d).passed());

    let reg = DoubleModule::regular(&d);
    let yd = double_module_to_yd(&reg).unwrap();
    println!("regular module as a twisted YD module: {} checks pass", validate_yd(&yd).passed());
    let again = yd_to_double_module(&d, &yd).unwrap();
    println!("round trip is the identity: {}", again.action() == reg.action());
}
