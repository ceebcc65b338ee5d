//! Named Hopf algebras, actions and object families used as a standard test bed.

use std::sync::Arc;

use crate::autoact::{conjugate_action, exact_sequence_action, ActionData, ComonoidalAutomorphism};
use crate::eqcenter::CenterObject;
use crate::exactlin::{Mat, Scalar};
use crate::gdouble::{build_g_coalgebra, regular_objects, CoproductMode};
use crate::group::FiniteGroup;
use crate::hopfcore::{group_algebra, sweedler_h4, trivial_hopf, HopfAlgebra};
use crate::project::{Field, ProjectFile};
use crate::ydmod::twisted_adjoint;

pub fn trivial() -> Arc<HopfAlgebra> {
    Arc::new(trivial_hopf())
}

pub fn kz2() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(&FiniteGroup::cyclic(2)))
}

pub fn kz3() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(&FiniteGroup::cyclic(3)))
}

pub fn ks3() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(&FiniteGroup::symmetric3()))
}

pub fn sweedler() -> Arc<HopfAlgebra> {
    Arc::new(sweedler_h4())
}

/// `diag(1, 1, λ, λ)` on Sweedler's algebra, a Hopf automorphism for every `λ ≠ 0`.
pub fn sweedler_scaling(h: &Arc<HopfAlgebra>, lambda: Scalar) -> ComonoidalAutomorphism {
    let mut f = Mat::identity(4);
    f.set(2, 2, lambda.clone());
    f.set(3, 3, lambda.clone());
    ComonoidalAutomorphism::bialgebra(format!("f{lambda}"), h.clone(), f).expect("4x4 map")
}

/// `Z/2 = S₃/A₃` acting on `k[A₃] ≅ k[Z/3]` with the section through `(12)`.
pub fn intro_s3() -> ActionData {
    let s3 = FiniteGroup::symmetric3();
    let a3: Vec<usize> = ["e", "(123)", "(132)"].iter().map(|l| s3.index_of(l).expect("label")).collect();
    let section = [s3.identity(), s3.index_of("(12)").expect("label")];
    exact_sequence_action("intro_s3", &s3, &a3, &section).expect("valid extension")
}

/// `Z/2 = (Z/4)/(Z/2)` acting on `k[Z/2]` with the section `{0, 1}`; the gauge
/// element at `(1, 1)` is the generator.
pub fn intro_z4() -> ActionData {
    exact_sequence_action("intro_z4", &FiniteGroup::cyclic(4), &[0, 2], &[0, 1]).expect("valid extension")
}

/// `Z/2` acting on Sweedler's algebra through `x ↦ -x`.
pub fn sweedler_z2() -> ActionData {
    let h = sweedler();
    let flip = sweedler_scaling(&h, Scalar::int(-1)).map().clone();
    ActionData::strict("sweedler_z2", FiniteGroup::cyclic(2), h, vec![Mat::identity(4), flip]).expect("strict action")
}

/// `S₃` acting on `k[S₃]` by conjugation `x ↦ g⁻¹ x g`.
pub fn s3_conjugation() -> ActionData {
    let s3 = FiniteGroup::symmetric3();
    let maps = s3
        .elements()
        .map(|g| Mat::from_fn(6, 6, |i, j| if i == s3.conjugate(s3.inv(g), j) { Scalar::one() } else { Scalar::zero() }))
        .collect();
    ActionData::strict("s3_conjugation", s3, ks3(), maps).expect("strict action")
}

/// `Z/2` acting on `k[S₃]` by conjugation with `(12)`.
pub fn ks3_z2() -> ActionData {
    let s3 = FiniteGroup::symmetric3();
    let t = s3.index_of("(12)").expect("label");
    let conj = Mat::from_fn(6, 6, |i, j| if i == s3.conjugate(t, j) { Scalar::one() } else { Scalar::zero() });
    ActionData::strict("ks3_z2", FiniteGroup::cyclic(2), ks3(), vec![Mat::identity(6), conj]).expect("strict action")
}

/// `Z/2` acting on `k[Z/3]` by inversion.
pub fn z2_on_kz3() -> ActionData {
    let inv = Mat::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    ActionData::strict("z2_on_kz3", FiniteGroup::cyclic(2), kz3(), vec![Mat::identity(3), inv]).expect("strict action")
}

/// [`sweedler_z2`] transported along the gauge element `1 + x`, which gives the
/// generator a nontrivial comonoidal structure.
pub fn sweedler_z2_twisted() -> ActionData {
    let strict = sweedler_z2();
    let h = strict.hopf().clone();
    let mut a = h.unit().clone();
    a[2] = Scalar::one();
    conjugate_action(&strict, &[h.unit().clone(), a]).expect("invertible").renamed("sweedler_z2_twisted")
}

/// `Z/2` acting on `k[Z/2]` by the identity map, with comonoidal structure
/// `J = p₊⊗p₊ + p₊⊗p₋ + p₋⊗p₊ + λ² p₋⊗p₋` on the generator and
/// `b = p₊ + λ⁻² p₋`, where `p± = (1 ± g)/2`.
pub fn kz2_cocycle(lambda: Scalar) -> ActionData {
    let h = kz2();
    let half = Scalar::frac(1, 2);
    let p_plus = vec![half.clone(), half.clone()];
    let p_minus = vec![half.clone(), -&half];
    let l2 = &lambda * &lambda;
    let mut j = vec![Scalar::zero(); 4];
    for (a, b, c) in [
        (&p_plus, &p_plus, Scalar::one()),
        (&p_plus, &p_minus, Scalar::one()),
        (&p_minus, &p_plus, Scalar::one()),
        (&p_minus, &p_minus, l2.clone()),
    ] {
        for (o, t) in j.iter_mut().zip(crate::exactlin::tensor::kron_vec(a, b)) {
            *o += &(&c * &t);
        }
    }
    let twist = ComonoidalAutomorphism::new("f_1", h.clone(), Mat::identity(2), j).expect("J is invertible");
    let id = ComonoidalAutomorphism::identity(h.clone()).renamed("f_0");
    let l2_inv = l2.inv().expect("nonzero parameter");
    let b11: Vec<Scalar> = p_plus.iter().zip(&p_minus).map(|(p, m)| p + &(&l2_inv * m)).collect();
    let one = h.unit().clone();
    ActionData::new(
        "kz2_cocycle",
        FiniteGroup::cyclic(2),
        vec![Arc::new(id), Arc::new(twist)],
        vec![one.clone(), one.clone(), one, b11],
    )
    .expect("normalized data")
}

/// The project for each bundled fixture, by file stem.
pub fn fixture_project(stem: &str) -> Option<ProjectFile> {
    let mut p = ProjectFile::new(Field::Rational);
    match stem {
        "trivial" => {
            p.add_action(&ActionData::trivial(trivial()));
        }
        "kz2" => {
            p.add_action(&kz2_cocycle(Scalar::int(2)));
        }
        "ks3" => {
            p.add_action(&ks3_z2());
        }
        "s3_conjugation" => {
            p.add_action(&s3_conjugation());
            p.suites = vec!["action".into(), "center".into()];
        }
        "sweedler" => {
            p.add_action(&sweedler_z2());
        }
        "sweedler_twisted" => {
            p.add_action(&sweedler_z2_twisted());
        }
        "intro_s3" => {
            p.add_action(&intro_s3());
        }
        "intro_z4" => {
            p.add_action(&intro_z4());
        }
        "z2_on_kz3" => {
            let action = z2_on_kz3();
            let key = p.add_action(&action);
            let data = build_g_coalgebra(&action, CoproductMode::Modified).expect("strict action");
            let reg = regular_objects(&data).expect("regular modules are objects").pop().expect("two grades");
            let grade = action.group().label(reg.grade()).to_string();
            p.add_yd(reg.yd(), Some((&key, &grade)));
        }
        _ => return None,
    }
    Some(p)
}

/// Stems of the bundled fixtures.
pub const FIXTURES: [&str; 9] =
    ["trivial", "kz2", "ks3", "s3_conjugation", "sweedler", "sweedler_twisted", "intro_s3", "intro_z4", "z2_on_kz3"];

/// The unit together with the twisted adjoint object in every grade.
pub fn center_family(action: &ActionData) -> Vec<CenterObject> {
    let grp = action.group();
    let mut out = vec![CenterObject::unit(action)];
    for g in grp.elements() {
        let ad = twisted_adjoint(action.auto(g).clone()).expect("antipode present").renamed(format!("ad_{}", grp.label(g)));
        out.push(CenterObject::new(action, g, ad).expect("twisted adjoint is a Yetter-Drinfeld module"));
    }
    out
}
