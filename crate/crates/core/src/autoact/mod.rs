//! Comonoidal automorphisms, gauge transformations, their composition, and group
//! actions on `H`-mod given by automorphisms and gauge elements.

mod action;
mod automorphism;
mod gauge;

pub use action::{conjugate_action, exact_sequence_action, validate_action, ActionData};
pub use automorphism::{
    conjugate_by, pullback_module, star_compose, validate_comonoidal_automorphism, ComonoidalAutomorphism,
};
pub use gauge::{validate_gauge, GaugeTransformation};

use thiserror::Error;

use crate::group::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutoError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("input failed validation: {0}")]
    ValidationFailure(String),
    #[error("action is not normalized: {0}")]
    NotNormalized(String),
    #[error("bad extension data: {0}")]
    BadExtension(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactlin::{Mat, Scalar};
    use crate::group::FiniteGroup;
    use crate::hopfcore::{group_algebra, regular_module, sweedler_h4};

    fn h4_scaling(h: &Arc<crate::hopfcore::HopfAlgebra>, lambda: i64) -> ComonoidalAutomorphism {
        let f = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, lambda, 0], &[0, 0, 0, lambda]]);
        ComonoidalAutomorphism::bialgebra(format!("f{lambda}"), h.clone(), f).unwrap()
    }

    #[test]
    fn identity_and_sign_flip_validate() {
        let h = Arc::new(sweedler_h4());
        assert!(validate_comonoidal_automorphism(&ComonoidalAutomorphism::identity(h.clone())).all_pass());
        let r = validate_comonoidal_automorphism(&h4_scaling(&h, -1));
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn nilpotent_twist_breaks_cocycle() {
        let h = Arc::new(sweedler_h4());
        let mut f2 = h.unit_tensor(2);
        f2[2 * 4 + 2] = Scalar::one();
        let phi = ComonoidalAutomorphism::new("bad", h.clone(), Mat::identity(4), f2).unwrap();
        let r = validate_comonoidal_automorphism(&phi);
        assert!(!r.verdict("auto.cocycle"));
        assert!(r.find("auto.cocycle").unwrap().witness.is_some());
    }

    #[test]
    fn star_of_scalings_multiplies() {
        let h = Arc::new(sweedler_h4());
        let (a, b) = (h4_scaling(&h, 2), h4_scaling(&h, 3));
        let c = star_compose(&a, &b).unwrap();
        assert_eq!(c, h4_scaling(&h, 6));
        let id = ComonoidalAutomorphism::identity(h.clone());
        assert_eq!(star_compose(&a, &id).unwrap(), a);
        assert_eq!(star_compose(&id, &a).unwrap(), a);
    }

    #[test]
    fn gauge_by_group_element() {
        let s3 = FiniteGroup::symmetric3();
        let h = Arc::new(group_algebra(&s3));
        let id = Arc::new(ComonoidalAutomorphism::identity(h.clone()));
        let a = h.basis(s3.index_of("(123)").unwrap());
        let target = Arc::new(conjugate_by(&id, &a).unwrap());
        let t = GaugeTransformation::new(id.clone(), target.clone(), a.clone()).unwrap();
        assert!(validate_gauge(&t).all_pass());
        let wrong = GaugeTransformation::new(id, target, h.basis(s3.index_of("(12)").unwrap())).unwrap();
        let r = validate_gauge(&wrong);
        assert!(!r.verdict("gauge.conjugation"));
    }

    #[test]
    fn exact_sequence_fixtures() {
        let s3 = FiniteGroup::symmetric3();
        let a3: Vec<usize> = ["e", "(123)", "(132)"].iter().map(|l| s3.index_of(l).unwrap()).collect();
        let act = exact_sequence_action("s3", &s3, &a3, &[0, s3.index_of("(12)").unwrap()]).unwrap();
        assert!(validate_action(&act).all_pass(), "{}", validate_action(&act));
        assert!(act.is_strict());

        let z4 = FiniteGroup::cyclic(4);
        let act = exact_sequence_action("z4", &z4, &[0, 2], &[0, 1]).unwrap();
        assert!(validate_action(&act).all_pass());
        assert_eq!(act.b(1, 1), &act.hopf().basis(1));
    }

    #[test]
    fn perturbed_gauge_breaks_cocycle() {
        let z4 = FiniteGroup::cyclic(4);
        let act = exact_sequence_action("z4", &z4, &[0, 2], &[0, 1]).unwrap();
        let h = act.hopf().clone();
        let mut gauges = act.gauges().to_vec();
        gauges[3] = vec![Scalar::int(2), Scalar::int(1)];
        let bad = ActionData::new("bad", act.group().clone(), act.autos().to_vec(), gauges).unwrap();
        let r = validate_action(&bad);
        assert!(!r.all_pass());
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn conjugated_h4_action_is_nonstrict_and_valid() {
        let h = Arc::new(sweedler_h4());
        let strict = ActionData::strict("h4", FiniteGroup::cyclic(2), h.clone(), vec![Mat::identity(4), h4_scaling(&h, -1).map().clone()]).unwrap();
        assert!(validate_action(&strict).all_pass());
        let mut a = h.unit().clone();
        a[2] = Scalar::one();
        let conj = conjugate_action(&strict, &[h.unit().clone(), a]).unwrap();
        assert!(!conj.is_strict());
        let r = validate_action(&conj);
        assert!(r.all_pass(), "{r}");
        for phi in conj.autos() {
            assert!(validate_comonoidal_automorphism(phi).all_pass());
        }
    }

    #[test]
    fn pullback_composes_like_star() {
        let h = Arc::new(sweedler_h4());
        let (a, b) = (h4_scaling(&h, 2), h4_scaling(&h, -1));
        let x = regular_module(&h);
        let lhs = pullback_module(&a, &pullback_module(&b, &x));
        let rhs = pullback_module(&star_compose(&a, &b).unwrap(), &x);
        assert_eq!(lhs, rhs);
    }
}
