//! The G-braided category `Z_G(H)`: graded tensor product, crossed action,
//! compositors, G-braiding, and coherence checks on concrete objects.

mod diagrams;
mod object;
mod ops;

pub use diagrams::{
    center_suite, check_action_braid, check_action_coherence, check_braiding_morphism, check_heptagons,
    TUPLE_DIM_CAP,
};
pub use object::CenterObject;
pub use ops::{
    compare_crossed_coactions, compositor, crossed_action, crossed_coaction_closed_form, crossed_half_braiding,
    crossed_morphism, g_braiding, yd_tensor, ClosedForm,
};

use thiserror::Error;

use crate::ydmod::YdError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("invalid object: {0}")]
    Invalid(String),
    #[error(transparent)]
    Yd(#[from] YdError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autoact::{validate_action, ActionData};
    use crate::catalog;
    use crate::exactlin::{Mat, Scalar};
    use crate::ydmod::{trivial_yd, twisted_adjoint, validate_yd, validate_yd_morphism, YDModule};

    fn all_actions() -> Vec<ActionData> {
        vec![
            catalog::intro_s3(),
            catalog::intro_z4(),
            catalog::sweedler_z2(),
            catalog::sweedler_z2_twisted(),
            catalog::kz2_cocycle(Scalar::int(2)),
        ]
    }

    #[test]
    fn fixtures_are_valid_actions() {
        for a in all_actions() {
            let r = validate_action(&a);
            assert!(r.all_pass(), "{}: {r}", a.name());
        }
        assert!(!catalog::sweedler_z2_twisted().is_strict());
        assert!(!catalog::kz2_cocycle(Scalar::int(2)).is_strict());
        assert!(catalog::sweedler_z2().is_strict());
    }

    #[test]
    fn center_suite_passes_except_printed_form() {
        for a in all_actions() {
            let fam = catalog::center_family(&a);
            let r = center_suite(&a, &fam);
            let other: Vec<_> = r.failures().filter(|f| f.id != "center.crossed_printed_form").collect();
            assert!(other.is_empty(), "{}: {:?}", a.name(), other);
            assert!(r.find("diagram.hepta1").is_some() && r.find("diagram.action_braid").is_some());
        }
    }

    #[test]
    fn printed_form_discrepancy_has_a_witness() {
        let a = catalog::sweedler_z2_twisted();
        let fam = catalog::center_family(&a);
        let c = compare_crossed_coactions(&a, 1, &fam[1], ClosedForm::Printed).unwrap();
        assert!(!c.pass);
        assert!(c.witness.unwrap().starts_with("delta(x1)"));
        for x in &fam {
            for k in a.group().elements() {
                assert!(compare_crossed_coactions(&a, k, x, ClosedForm::Amended).unwrap().pass);
            }
        }
        for b in [catalog::intro_s3(), catalog::intro_z4(), catalog::kz2_cocycle(Scalar::int(3))] {
            for x in &catalog::center_family(&b) {
                assert!(compare_crossed_coactions(&b, 1, x, ClosedForm::Printed).unwrap().pass);
            }
        }
    }

    #[test]
    fn printed_coaction_is_not_a_twisted_module() {
        let a = catalog::sweedler_z2_twisted();
        let x = &catalog::center_family(&a)[1];
        let printed = crossed_coaction_closed_form(&a, 1, x, ClosedForm::Printed);
        let module = x.yd().module().pullback(a.auto(1).map());
        let y = YDModule::new("printed", a.auto(1).clone(), None, module, printed).unwrap();
        assert!(!validate_yd(&y).all_pass());
    }

    #[test]
    fn strict_crossed_coaction_is_inverse_twist() {
        for a in [catalog::sweedler_z2(), catalog::intro_s3()] {
            let h = a.hopf();
            let n = h.dim();
            for x in catalog::center_family(&a) {
                for k in a.group().elements() {
                    let y = crossed_action(&a, k, &x).unwrap();
                    let f_inv = a.auto(k).map_inverse().unwrap();
                    let expected = &crate::exactlin::kron(f_inv, &Mat::identity(x.dim())) * x.yd().coaction();
                    assert_eq!(y.yd().coaction(), &expected);
                    assert_eq!(y.yd().coaction().rows(), n * x.dim());
                }
            }
        }
    }

    #[test]
    fn identity_crossing_and_trivial_compositors() {
        let a = catalog::sweedler_z2_twisted();
        for x in catalog::center_family(&a) {
            assert_eq!(crossed_action(&a, 0, &x).unwrap(), x);
            let m = compositor(&a, 0, 0, &x).unwrap();
            assert!(m.map.is_identity());
        }
    }

    #[test]
    fn intro_z4_compositor_is_the_generator() {
        let a = catalog::intro_z4();
        let h = a.hopf();
        let reg = crate::hopfcore::regular_module(h);
        let coaction = crate::exactlin::kron(&Mat::column_vector(h.unit()), &Mat::identity(2));
        let yd = YDModule::new("reg", a.auto(1).clone(), None, reg, coaction).unwrap();
        let x = CenterObject::new(&a, 1, yd).unwrap();
        let m = compositor(&a, 1, 1, &x).unwrap();
        assert_eq!(m.map, Mat::from_ints(&[&[0, 1], &[1, 0]]));
        assert!(validate_yd_morphism(&m.source, &m.target, &m.map).all_pass());
    }

    #[test]
    fn grades_are_bookkept() {
        let a = catalog::intro_s3();
        let fam = catalog::center_family(&a);
        let xy = yd_tensor(&a, &fam[2], &fam[2]).unwrap();
        assert_eq!(xy.grade(), 0);
        assert_eq!(xy.yd().grade(), Some("e"));
        let wrong = twisted_adjoint(a.auto(1).clone()).unwrap();
        assert!(matches!(CenterObject::new(&a, 0, wrong), Err(CenterError::GradeMismatch(_))));
        assert!(matches!(CenterObject::new(&a, 1, trivial_yd(a.auto(1).clone())), Err(CenterError::Invalid(_))));
    }

    #[test]
    fn braiding_is_natural_in_both_arguments() {
        let a = catalog::sweedler_z2_twisted();
        let fam = catalog::center_family(&a);
        let x = &fam[2];
        let y = &fam[1];
        let n = x.dim();
        let u = Mat::identity(n).scale(&Scalar::int(3));
        let v = Mat::identity(y.dim()).scale(&Scalar::frac(-1, 2));
        let lhs = &crate::exactlin::kron(&v, &u) * &g_braiding(x, y);
        let rhs = &g_braiding(x, y) * &crate::exactlin::kron(&u, &v);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonabelian_crossing_moves_grades_by_conjugation() {
        let a = catalog::s3_conjugation();
        let grp = a.group();
        let fam = catalog::center_family(&a);
        let t = grp.index_of("(12)").unwrap();
        let c = grp.index_of("(123)").unwrap();
        let x = fam.iter().find(|x| x.grade() == c).unwrap();
        let moved = crossed_action(&a, t, x).unwrap();
        assert_eq!(moved.grade(), grp.conjugate(t, c));
        assert_ne!(moved.grade(), c);
        let r = center_suite(&a, &[fam[0].clone(), x.clone()]);
        assert!(r.all_pass(), "{r}");
    }
}
