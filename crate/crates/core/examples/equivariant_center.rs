//! Runs the full set of center checks on a strict and a twisted action of `Z/2` on
//! Sweedler's algebra.

use gcenter::catalog::{center_family, sweedler_z2, sweedler_z2_twisted};
use gcenter::eqcenter::{center_suite, crossed_action, g_braiding};

fn main() {
    for a in [sweedler_z2(), sweedler_z2_twisted()] {
        let family = center_family(&a);
        let r = center_suite(&a, &family);
        println!("{}: {} of {} checks pass", a.name(), r.passed(), r.len());
        for f in r.failures() {
            println!("  {f}");
        }
    }

    let a = sweedler_z2();
    let family = center_family(&a);
    let moved = crossed_action(&a, 1, &family[2]).unwrap();
    println!("{} sits in grade {}", moved.name(), a.group().label(moved.grade()));
    println!("braiding of {} with itself:\n{}", family[2].name(), g_braiding(&family[2], &family[2]));
}
