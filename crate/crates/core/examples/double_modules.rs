//! Compares tensor products, the crossed action and the braiding of the center with
//! their counterparts for modules over the family of twisted doubles.

use gcenter::catalog::z2_on_kz3;
use gcenter::gdouble::{build_g_coalgebra, compare_with_double_modules, regular_objects, validate_g_coalgebra, CoproductMode};

fn main() {
    let a = z2_on_kz3();
    let data = build_g_coalgebra(&a, CoproductMode::Modified).unwrap();
    println!("G-coalgebra: {} checks pass", validate_g_coalgebra(&data).passed());
    let regs = regular_objects(&data).unwrap();
    for x in &regs {
        for y in &regs {
            for d in compare_with_double_modules(&data, x, y).unwrap() {
                println!("{:<5} {} on {}", if d.pass { "ok" } else { "FAIL" }, d.diagram, d.operands);
            }
        }
    }
}
