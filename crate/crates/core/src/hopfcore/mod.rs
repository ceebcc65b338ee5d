//! Hopf algebras by structure constants, their modules and comodules, and the
//! standard constructions: group algebras, Sweedler's `H4`, `(H*)^cop`, and the
//! twisted coalgebra `H^{f2}`.

mod algebra;
mod constructions;
mod module;
mod validate;

pub use algebra::HopfAlgebra;
pub use constructions::{
    dual_cop, group_algebra, group_algebra_from_table, opposite_coopposite, sweedler_h4, trivial_hopf,
};
pub use module::{regular_module, trivial_module, twisted_coalgebra, CoalgebraData, HComodule, HModule};
pub use validate::{antipode_is_involutive, counit_antipode_invariant, validate_hopf};

use thiserror::Error;

use crate::group::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    InvalidGroupTable(#[from] GroupError),
    #[error("antipode is missing")]
    MissingAntipode,
    #[error("antipode is not invertible or its inverse is missing")]
    MissingAntipodeInverse,
    #[error("twisted comultiplication is not a coalgebra: {0}")]
    CocycleViolation(String),
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactlin::{Mat, Scalar};
    use crate::group::FiniteGroup;

    #[test]
    fn trivial_and_group_algebras_validate() {
        assert!(validate_hopf(&trivial_hopf()).all_pass());
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()] {
            let h = group_algebra(&g);
            assert!(validate_hopf(&h).all_pass(), "{}", validate_hopf(&h));
            assert!(antipode_is_involutive(&h));
        }
    }

    #[test]
    fn sweedler_properties() {
        let h = sweedler_h4();
        assert!(validate_hopf(&h).all_pass(), "{}", validate_hopf(&h));
        let s = h.antipode().unwrap();
        // S² is conjugation by g: fixes 1 and g, negates x and gx
        assert_eq!(s * s, Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]));
        assert!(counit_antipode_invariant(&h));
        assert!(!antipode_is_involutive(&h));
    }

    #[test]
    fn flipped_antipode_sign_is_caught_at_x() {
        let h = sweedler_h4();
        let mut s = h.antipode().unwrap().clone();
        s.set(3, 2, Scalar::one());
        let bad = HopfAlgebra::new("bad", h.labels().to_vec(), h.mult().clone(), h.unit().clone(), h.comult().clone(), h.counit().clone(), Some(s)).unwrap();
        let r = validate_hopf(&bad);
        let fail = r.find("hopf.antipode_left").unwrap();
        assert_eq!(fail.witness.as_deref(), Some("(x)"));
    }

    #[test]
    fn dual_cop_validates_and_is_involutive_up_to_op_cop() {
        for h in [trivial_hopf(), group_algebra(&FiniteGroup::cyclic(2)), sweedler_h4()] {
            let d = dual_cop(&h).unwrap();
            assert!(validate_hopf(&d).all_pass(), "{}", validate_hopf(&d));
            let dd = dual_cop(&d).unwrap();
            assert!(dd.same_structure(&opposite_coopposite(&h)));
        }
        assert!(dual_cop(&trivial_hopf()).unwrap().same_structure(&trivial_hopf()));
    }

    #[test]
    fn twisted_coalgebra_with_trivial_twist_is_untwisted() {
        let h = sweedler_h4();
        let one = h.unit_tensor(2);
        assert_eq!(twisted_coalgebra(&h, &one).unwrap(), CoalgebraData::of_hopf(&h));
    }

    #[test]
    fn regular_module_is_a_module() {
        let h = Arc::new(group_algebra(&FiniteGroup::symmetric3()));
        let m = regular_module(&h);
        assert!(m.validate("reg").all_pass());
        assert!(m.rho(h.unit()).is_identity());
        assert_eq!(regular_module(&Arc::new(trivial_hopf())).dim(), 1);
    }
}
