//! Doubles `D_f = H ⊗ H*` twisted by bialgebra automorphisms, the family they form
//! over a group action, and the comparison with the equivariant center.

mod double;
mod gcoalgebra;
mod pairing;

use thiserror::Error;

use crate::eqcenter::CenterError;
use crate::ydmod::YdError;

pub use double::{
    build_double, coaction_with_basis, double_module_to_yd, validate_double, yd_to_double_module, DoubleAlgebra,
    DoubleModule,
};
pub use gcoalgebra::{
    build_g_coalgebra, compare_with_double_modules, double_suite, regular_objects, tensor_mul, validate_g_coalgebra, CoproductMode,
    GCoalgebraData,
};
pub use pairing::{canonical_ev_pairing, validate_pairing, HopfPairing};

#[derive(Debug, Error)]
pub enum GDoubleError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("validation failed: {0}")]
    ValidationFailure(String),
    #[error("not a bialgebra automorphism: {0}")]
    NotBialgebraAutomorphism(String),
    #[error("comonoidal structure is not trivial: {0}")]
    NontrivialComonoidalStructure(String),
    #[error("action {0} has comonoidal structures or gauge elements")]
    NonStrictAction(String),
    #[error("Hopf algebra has no antipode")]
    MissingAntipode,
    #[error("antipode is not invertible")]
    MissingAntipodeInverse,
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error(transparent)]
    Yd(#[from] YdError),
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog::{center_family, intro_s3, kz2, kz3, ks3, s3_conjugation, sweedler, sweedler_scaling, sweedler_z2};
    use crate::exactlin::{Mat, Scalar};
    use crate::ydmod::validate_yd;

    fn assert_pass(r: &crate::Report) {
        let f: Vec<_> = r.failures().collect();
        assert!(f.is_empty(), "{f:?}");
    }

    fn h4_flip() -> Arc<DoubleAlgebra> {
        let h = sweedler();
        Arc::new(build_double(&h, sweedler_scaling(&h, Scalar::int(-1)).map()).unwrap())
    }

    #[test]
    fn canonical_pairings_validate() {
        for h in [kz2(), kz3(), ks3(), sweedler()] {
            let p = canonical_ev_pairing(&h).unwrap();
            assert_pass(&validate_pairing(&p));
            assert!(p.dual_basis().unwrap().is_identity());
        }
    }

    #[test]
    fn degenerate_and_perturbed_pairings_fail() {
        let p = canonical_ev_pairing(&kz2()).unwrap();
        let zero = HopfPairing { matrix: Mat::zeros(2, 2), ..p.clone() };
        let r = validate_pairing(&zero);
        assert!(!r.verdict("pairing.nondegenerate"));
        let mut m = p.matrix.clone();
        m.set(1, 1, Scalar::int(2));
        let r = validate_pairing(&HopfPairing { matrix: m, ..p });
        assert!(!r.verdict("pairing.left_multiplicative"));
        assert!(r.verdict("pairing.nondegenerate"));
    }

    #[test]
    fn doubles_are_associative_and_unital() {
        for h in [kz2(), kz3()] {
            let d = build_double(&h, &Mat::identity(h.dim())).unwrap();
            assert_eq!(d.dim(), h.dim() * h.dim());
            assert_pass(&validate_double(&d));
        }
        assert_pass(&validate_double(&h4_flip()));
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let h = kz2();
        let err = build_double(&h, &Mat::from_ints(&[&[1, 1], &[0, 1]])).unwrap_err();
        assert!(matches!(err, GDoubleError::NotBialgebraAutomorphism(_)));
    }

    #[test]
    fn regular_module_round_trip() {
        let d = h4_flip();
        let reg = DoubleModule::regular(&d);
        assert_pass(&reg.validate("regular"));
        let yd = double_module_to_yd(&reg).unwrap();
        assert_pass(&validate_yd(&yd));
        assert_eq!(yd_to_double_module(&d, &yd).unwrap().action(), reg.action());
    }

    #[test]
    fn yd_round_trip_is_identity() {
        for action in [sweedler_z2(), intro_s3()] {
            let data = build_g_coalgebra(&action, CoproductMode::Modified).unwrap();
            for x in center_family(&action) {
                let m = yd_to_double_module(data.double(x.grade()), x.yd()).unwrap();
                assert_pass(&m.validate(x.name()));
                let back = double_module_to_yd(&m).unwrap();
                assert_eq!(back.coaction(), x.yd().coaction());
                for i in 0..action.hopf().dim() {
                    assert_eq!(back.action(i), x.yd().action(i));
                }
            }
        }
    }

    #[test]
    fn coaction_does_not_depend_on_the_basis() {
        let d = h4_flip();
        let reg = DoubleModule::regular(&d);
        let p = Mat::from_ints(&[&[1, 2, 0, -1], &[0, 1, 3, 0], &[0, 0, 1, 5], &[1, 0, 0, 1]]);
        let a = coaction_with_basis(&reg, &p).unwrap();
        let b = double_module_to_yd(&reg).unwrap();
        assert_eq!(a.coaction(), b.coaction());
    }

    #[test]
    fn nonstrict_actions_are_refused() {
        let err = build_g_coalgebra(&crate::catalog::intro_z4(), CoproductMode::Modified).unwrap_err();
        assert!(matches!(err, GDoubleError::NonStrictAction(_)));
    }

    #[test]
    fn g_coalgebra_axioms_in_both_modes() {
        for mode in [CoproductMode::Modified, CoproductMode::Homomorphic] {
            for action in [sweedler_z2(), intro_s3()] {
                assert_pass(&validate_g_coalgebra(&build_g_coalgebra(&action, mode).unwrap()));
            }
        }
    }

    #[test]
    fn crossing_lands_in_the_inverse_conjugate() {
        let action = s3_conjugation();
        let data = build_g_coalgebra(&action, CoproductMode::Modified).unwrap();
        let grp = action.group();
        for g in grp.elements() {
            for h in grp.elements() {
                let t = data.crossing_target(g, h);
                assert_eq!(t, grp.mul(grp.mul(grp.inv(g), h), g));
                assert_eq!(**data.double(t), build_double(action.hopf(), action.auto(t).map()).unwrap());
            }
        }
        let fam = center_family(&action);
        for x in &fam {
            for r in compare_with_double_modules(&data, x, &fam[1]).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn classical_r_inverts_r_bar() {
        let data = build_g_coalgebra(&sweedler_z2(), CoproductMode::Modified).unwrap();
        assert_eq!(data.solve_r_bar_inverse(1, 0).unwrap(), data.r_bar_inverse_candidate());
    }

    #[test]
    fn module_isomorphism_on_regular_objects() {
        for action in [intro_s3(), sweedler_z2()] {
            let data = build_g_coalgebra(&action, CoproductMode::Modified).unwrap();
            let regs = regular_objects(&data).unwrap();
            assert_pass(&double_suite(&data, &regs));
        }
    }
}
