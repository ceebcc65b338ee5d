//! Twisted Yetter-Drinfeld modules, their morphisms, and the dictionary between
//! coactions and half-braidings.

mod braiding;
mod module;

pub use braiding::{
    check_half_braiding_axiom, check_half_braiding_linear, check_naturality, coaction_from_half_braiding,
    half_braiding, half_braiding_inverse,
};
pub use module::{
    trivial_yd, twisted_adjoint, validate_yd, validate_yd_morphism, CoactionTerms, YDModule, YDMorphism,
};
pub(crate) use braiding::rho_tensor2;
pub(crate) use module::add_tensor;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("antipode is missing")]
    MissingAntipode,
    #[error("antipode inverse is missing")]
    MissingAntipodeInverse,
    #[error("not a half-braiding: {0}")]
    NotHalfBraiding(String),
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::autoact::{conjugate_by, ComonoidalAutomorphism};
    use crate::exactlin::{leg_permutation, Mat, Scalar};
    use crate::hopfcore::{regular_module, sweedler_h4, HopfAlgebra};

    fn h4() -> Arc<HopfAlgebra> {
        Arc::new(sweedler_h4())
    }

    fn flip_sign(h: &Arc<HopfAlgebra>) -> Arc<ComonoidalAutomorphism> {
        let f = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
        Arc::new(ComonoidalAutomorphism::bialgebra("f-1", h.clone(), f).unwrap())
    }

    fn twisted(h: &Arc<HopfAlgebra>) -> Arc<ComonoidalAutomorphism> {
        let mut a = h.unit().clone();
        a[2] = Scalar::one();
        Arc::new(conjugate_by(&flip_sign(h), &a).unwrap())
    }

    #[test]
    fn trivial_module_needs_identity_twist() {
        let h = h4();
        let id = Arc::new(ComonoidalAutomorphism::identity(h.clone()));
        assert!(validate_yd(&trivial_yd(id)).all_pass());
        let r = validate_yd(&trivial_yd(flip_sign(&h)));
        assert_eq!(r.find("yd.compatibility").unwrap().witness.as_deref(), Some("(x, x0)"));
        assert!(r.verdict("yd.forms_agree"));
    }

    #[test]
    fn twisted_adjoint_is_valid_for_nontrivial_f2() {
        let h = h4();
        let t = twisted(&h);
        assert!(!t.has_trivial_f2());
        let x = twisted_adjoint(t).unwrap();
        let r = validate_yd(&x);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn inverse_half_braiding_both_ways() {
        let h = h4();
        for t in [flip_sign(&h), twisted(&h)] {
            let x = twisted_adjoint(t).unwrap();
            let v = regular_module(&h);
            let g = half_braiding(&x, &v);
            let gi = half_braiding_inverse(&x, &v).unwrap();
            assert!((&g * &gi).is_identity());
            assert!((&gi * &g).is_identity());
            assert!(check_half_braiding_linear(&x, &v, &g, "t").all_pass());
            assert!(check_half_braiding_axiom(&x, &v, &v).all_pass());
            assert!(check_naturality(&x, &v, &v.tensor(&v)).all_pass());
        }
    }

    #[test]
    fn trivial_half_braiding_is_flip() {
        let h = h4();
        let x = trivial_yd(Arc::new(ComonoidalAutomorphism::identity(h.clone())));
        let v = regular_module(&h);
        assert_eq!(half_braiding(&x, &v), leg_permutation(&[1, 4], &[1, 0]));
    }

    #[test]
    fn coaction_round_trip_and_rejection() {
        let h = h4();
        let t = twisted(&h);
        let x = twisted_adjoint(t.clone()).unwrap();
        let reg = regular_module(&h);
        let gamma = half_braiding(&x, &reg);
        let back = coaction_from_half_braiding(t.clone(), x.module(), &gamma, None).unwrap();
        assert_eq!(back.coaction(), x.coaction());
        let mut broken = gamma.clone();
        broken.set(0, 1, Scalar::int(7));
        assert!(matches!(
            coaction_from_half_braiding(t, x.module(), &broken, None),
            Err(YdError::NotHalfBraiding(_))
        ));
    }
}
