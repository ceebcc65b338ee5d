use crate::autoact::ActionData;
use crate::exactlin::{kron, Mat, Scalar};
use crate::hopfcore::{regular_module, HModule};
use crate::report::CheckResult;
use crate::ydmod::{add_tensor, coaction_from_half_braiding, half_braiding, rho_tensor2, YDModule, YDMorphism};

use super::{CenterError, CenterObject};

/// `X ⊗ Y` in grade `gh`: diagonal action and
/// `δ(x ⊗ y) = b_{g,h} f_h(x₍₋₁₎) y₍₋₁₎ ⊗ x₍₀₎ ⊗ y₍₀₎`.
pub fn yd_tensor(action: &ActionData, x: &CenterObject, y: &CenterObject) -> Result<CenterObject, CenterError> {
    let (g, k) = (x.grade(), y.grade());
    for (obj, grade) in [(x, g), (y, k)] {
        if **obj.yd().twist() != **action.auto(grade) {
            return Err(CenterError::GradeMismatch(format!("{} does not belong to {}", obj.name(), action.name())));
        }
    }
    let h = action.hopf();
    let n = h.dim();
    let (dx, dy) = (x.dim(), y.dim());
    let module = x.yd().module().tensor(y.yd().module());
    let b = action.b(g, k);
    let fk = action.auto(k);
    let lead: Vec<_> = (0..n).map(|i| h.mul(b, &fk.map().col(i))).collect();
    let mut coaction = Mat::zeros(n * dx * dy, dx * dy);
    for xi in 0..dx {
        for yi in 0..dy {
            let mut col = vec![Scalar::zero(); n * dx * dy];
            for (hx, x0, c) in x.yd().coaction_terms(xi) {
                for (hy, y0, e) in y.yd().coaction_terms(yi) {
                    let elem = h.mul(&lead[*hx], &h.basis(*hy));
                    let mut rest = vec![Scalar::zero(); dx * dy];
                    rest[x0 * dy + y0] = Scalar::one();
                    add_tensor(&mut col, &elem, &rest, &(c * e));
                }
            }
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    coaction.set(r, xi * dy + yi, v);
                }
            }
        }
    }
    let gk = action.group().mul(g, k);
    let name = format!("({} x {})", x.name(), y.name());
    let yd = YDModule::new(name, action.auto(gk).clone(), None, module, coaction)?;
    CenterObject::checked_grade(action, gk, yd)
}

/// The half-braiding of `Φ_k(X)` at `V`, obtained by conjugating `γ_{X, φ_{k⁻¹}(V)}`
/// with the comonoidal structure of `φ_k` and the compositors of the action.
pub fn crossed_half_braiding(action: &ActionData, k: usize, x: &CenterObject, v: &HModule) -> Mat {
    let grp = action.group();
    let h = action.hopf();
    let g = x.grade();
    let ki = grp.inv(k);
    let dx = x.dim();
    let phi = action.auto(k);
    let w = v.pullback(action.auto(ki).map());
    let m1 = kron(&Mat::identity(dx), &v.rho(action.b_inv(k, ki)));
    let m2 = rho_tensor2(h, x.yd().module(), &w, phi.f2_inv());
    let m3 = half_braiding(x.yd(), &w);
    let m4 = rho_tensor2(h, &w.pullback(action.auto(g).map()), x.yd().module(), phi.f2());
    let outer = h.mul(action.b(grp.mul(k, g), ki), &action.auto(ki).apply(action.b(k, g)));
    let m5 = kron(&v.rho(&outer), &Mat::identity(dx));
    &(&(&(&m5 * &m4) * &m3) * &m2) * &m1
}

/// `Φ_k(X)`: the module pulled back along `f_k`, with the coaction read off the
/// transported half-braiding at the regular module. The result lies in grade `kgk⁻¹`.
pub fn crossed_action(action: &ActionData, k: usize, x: &CenterObject) -> Result<CenterObject, CenterError> {
    if **x.yd().twist() != **action.auto(x.grade()) {
        return Err(CenterError::GradeMismatch(format!("{} does not belong to {}", x.name(), action.name())));
    }
    let grp = action.group();
    if k == grp.identity() {
        return Ok(x.clone());
    }
    let target = grp.conjugate(k, x.grade());
    let reg = regular_module(action.hopf());
    let gamma = crossed_half_braiding(action, k, x, &reg);
    let module = x.yd().module().pullback(action.auto(k).map());
    let yd = coaction_from_half_braiding(action.auto(target).clone(), &module, &gamma, None)?;
    let name = format!("{}.{}", grp.label(k), x.name());
    CenterObject::checked_grade(action, target, yd.renamed(name))
}

/// Which transcription of the closed formula for the coaction of `Φ_k(X)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `b ⊗ f2_{k,2}(f̄_{k,1}x)₍₀₎` with
    /// `b = b_{k,gk⁻¹} b_{g,k⁻¹} f2_{k,1} f_{k⁻¹}((f̄_{k,1}x)₍₋₁₎) f̄_{k,2} b⁻¹_{k,k⁻¹}`.
    Printed,
    /// `b ⊗ f2_{k,2}(f̄_{k,1}x)₍₀₎` with
    /// `b = b_{kg,k⁻¹} f_{k⁻¹}(b_{k,g}) f_{k⁻¹}(f_g(f2_{k,1})) f_{k⁻¹}((f̄_{k,1}x)₍₋₁₎) f_{k⁻¹}(f̄_{k,2}) b⁻¹_{k,k⁻¹}`.
    Amended,
}

impl ClosedForm {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosedForm::Printed => "printed",
            ClosedForm::Amended => "amended",
        }
    }
}

/// The coaction of `Φ_k(X)` from a closed formula, all actions taken in `X`.
pub fn crossed_coaction_closed_form(action: &ActionData, k: usize, x: &CenterObject, form: ClosedForm) -> Mat {
    let grp = action.group();
    let h = action.hopf();
    let n = h.dim();
    let g = x.grade();
    let ki = grp.inv(k);
    let d = x.dim();
    let phi = action.auto(k);
    let f_ki = action.auto(ki);
    let f_g = action.auto(g);
    let (head, inner, outer): (Vec<Scalar>, Box<dyn Fn(usize) -> Vec<Scalar>>, Box<dyn Fn(usize) -> Vec<Scalar>>) = match form {
        ClosedForm::Printed => (
            h.mul(action.b(k, grp.mul(g, ki)), action.b(g, ki)),
            Box::new(|q| h.basis(q)),
            Box::new(|p| h.basis(p)),
        ),
        ClosedForm::Amended => (
            h.mul(action.b(grp.mul(k, g), ki), &f_ki.apply(action.b(k, g))),
            Box::new(|q| f_ki.apply(&f_g.apply(&h.basis(q)))),
            Box::new(|p| f_ki.apply(&h.basis(p))),
        ),
    };
    let f2 = h.terms2(phi.f2());
    let f2_inv = h.terms2(phi.f2_inv());
    let mut out = Mat::zeros(n * d, d);
    for xi in 0..d {
        let mut col = vec![Scalar::zero(); n * d];
        for (p1, p2, c) in &f2_inv {
            let z = x.yd().action(*p1).col(xi);
            for (hh, z0, e) in x.yd().coact(&z) {
                let tail = h.mul_all(&[&f_ki.apply(&h.basis(hh)), &outer(*p2), action.b_inv(k, ki)]);
                for (q1, q2, c2) in &f2 {
                    let elem = h.mul_all(&[&head, &inner(*q1), &tail]);
                    add_tensor(&mut col, &elem, &x.yd().action(*q2).col(z0), &(&(c * &e) * c2));
                }
            }
        }
        for (r, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                out.set(r, xi, v);
            }
        }
    }
    out
}

/// Compares the transported coaction of [`crossed_action`] with a closed form; a
/// failing verdict names the first differing coefficient.
pub fn compare_crossed_coactions(
    action: &ActionData,
    k: usize,
    x: &CenterObject,
    form: ClosedForm,
) -> Result<CheckResult, CenterError> {
    let derived = crossed_action(action, k, x)?;
    let closed = crossed_coaction_closed_form(action, k, x, form);
    let operands = format!("{} {} on {}", action.name(), action.group().label(k), x.name());
    let h = action.hopf();
    let d = x.dim();
    let witness = closed.first_difference(derived.yd().coaction()).map(|(r, c)| {
        format!(
            "delta(x{c}) at {} x x{}: closed form {} vs transported {}",
            h.label(r / d),
            r % d,
            closed.get(r, c),
            derived.yd().coaction().get(r, c)
        )
    });
    Ok(CheckResult::new(format!("center.crossed_{}_form", form.as_str()), operands, witness))
}

/// `Φ_{g,h,X}: Φ_g(Φ_h(X)) → Φ_{gh}(X)`, `x ↦ b_{g,h}.x`.
pub fn compositor(action: &ActionData, g: usize, h: usize, x: &CenterObject) -> Result<YDMorphism, CenterError> {
    let source = crossed_action(action, g, &crossed_action(action, h, x)?)?;
    let target = crossed_action(action, action.group().mul(g, h), x)?;
    let map = x.yd().module().rho(action.b(g, h));
    Ok(YDMorphism { source: source.into_yd(), target: target.into_yd(), map })
}

/// `c_{X,Y}(x ⊗ y) = x₍₋₁₎y ⊗ x₍₀₎`, a map `X ⊗ Y → Φ_g(Y) ⊗ X`.
pub fn g_braiding(x: &CenterObject, y: &CenterObject) -> Mat {
    half_braiding(x.yd(), y.yd().module())
}

/// `Φ_k` on morphisms is the identity on underlying maps.
pub fn crossed_morphism(action: &ActionData, k: usize, m: &YDMorphism, source: &CenterObject, target: &CenterObject) -> Result<YDMorphism, CenterError> {
    Ok(YDMorphism {
        source: crossed_action(action, k, source)?.into_yd(),
        target: crossed_action(action, k, target)?.into_yd(),
        map: m.map.clone(),
    })
}
