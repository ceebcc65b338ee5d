use std::sync::Arc;

use proptest::prelude::*;

use gcenter::autoact::{conjugate_by, star_compose, validate_comonoidal_automorphism, ComonoidalAutomorphism};
use gcenter::catalog::{sweedler, sweedler_scaling};
use gcenter::exactlin::{kron, Mat, Scalar};
use gcenter::gdouble::{build_double, coaction_with_basis, double_module_to_yd, DoubleModule};
use gcenter::hopfcore::HopfAlgebra;
use gcenter::project::{parse_project, serialize_project, Field, ProjectFile};
use gcenter::ydmod::{twisted_adjoint, validate_yd, YDModule};

fn h4() -> Arc<HopfAlgebra> {
    sweedler()
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=3).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::frac(n, d))
}

/// `ad_a ∘ scaling(λ)` with `a = 1 + c x + d gx` (always invertible), which carries a
/// nontrivial comonoidal structure whenever `a` is not group-like.
fn automorphism() -> impl Strategy<Value = ComonoidalAutomorphism> {
    (nonzero(), small(), small()).prop_map(|(lambda, c, d)| {
        let h = h4();
        let base = sweedler_scaling(&h, lambda);
        let a = vec![Scalar::one(), Scalar::zero(), c, d];
        conjugate_by(&base, &a).expect("1 + nilpotent is invertible")
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Mat::from_fn(rows, cols, |i, j| Scalar::int(v[i * cols + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn star_is_associative(a in automorphism(), b in automorphism(), c in automorphism()) {
        let left = star_compose(&star_compose(&a, &b).unwrap(), &c).unwrap();
        let right = star_compose(&a, &star_compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.map(), right.map());
        prop_assert_eq!(left.f2(), right.f2());
        prop_assert_eq!(left.f2_inv(), right.f2_inv());
    }

    #[test]
    fn star_outputs_revalidate(a in automorphism(), b in automorphism()) {
        prop_assert!(validate_comonoidal_automorphism(&a).all_pass());
        let c = star_compose(&a, &b).unwrap();
        prop_assert!(validate_comonoidal_automorphism(&c).all_pass());
    }

    #[test]
    fn kron_mixed_product(a in int_matrix(2, 3), b in int_matrix(2, 2), c in int_matrix(3, 2), d in int_matrix(2, 3)) {
        prop_assert_eq!(&kron(&a, &b) * &kron(&c, &d), kron(&(&a * &c), &(&b * &d)));
    }

    #[test]
    fn compatibility_forms_agree_under_perturbation(f in automorphism(), row in 0usize..16, col in 0usize..4, v in nonzero()) {
        let ad = twisted_adjoint(Arc::new(f)).unwrap();
        let mut coaction = ad.coaction().clone();
        let old = coaction.get(row, col).clone();
        coaction.set(row, col, &old + &v);
        let action = (0..4).map(|i| ad.action(i).clone()).collect();
        let perturbed = YDModule::from_action("perturbed", ad.twist().clone(), None, action, coaction).unwrap();
        for m in [&ad, &perturbed] {
            let r = validate_yd(m);
            prop_assert!(r.verdict("yd.forms_agree"));
        }
        prop_assert!(validate_yd(&ad).all_pass());
    }

    #[test]
    fn parse_inverts_serialize(fs in proptest::collection::vec(automorphism(), 1..4)) {
        let mut p = ProjectFile::new(Field::Rational);
        for (i, f) in fs.iter().enumerate() {
            let f = f.clone().renamed(format!("f{i}"));
            p.add_automorphism(&f);
            if i == 0 {
                let ad = twisted_adjoint(Arc::new(f)).unwrap();
                p.add_yd(&ad, None);
            }
        }
        p.suites = vec!["automorphism".into(), "yd".into()];
        let text = serialize_project(&p);
        let back = parse_project(&text).unwrap();
        prop_assert!(back == p);
        prop_assert_eq!(serialize_project(&back), text);
    }

    #[test]
    fn coaction_is_basis_independent(upper in proptest::collection::vec(-2i64..=2, 6), perm in 0usize..4) {
        let h = h4();
        let double = Arc::new(build_double(&h, sweedler_scaling(&h, Scalar::int(-1)).map()).unwrap());
        let reg = DoubleModule::regular(&double);
        let mut k = 0;
        let tri = Mat::from_fn(4, 4, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => Scalar::one(),
            std::cmp::Ordering::Less => { k += 1; Scalar::int(upper[k - 1]) }
            std::cmp::Ordering::Greater => Scalar::zero(),
        });
        let p = Mat::from_fn(4, 4, |i, j| if (i + perm) % 4 == j { Scalar::one() } else { Scalar::zero() });
        let basis = &p * &tri;
        let a = coaction_with_basis(&reg, &basis).unwrap();
        let b = double_module_to_yd(&reg).unwrap();
        prop_assert_eq!(a.coaction(), b.coaction());
    }
}
