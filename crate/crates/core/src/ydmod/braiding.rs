use std::sync::Arc;

use crate::autoact::ComonoidalAutomorphism;
use crate::exactlin::{kron, leg_permutation, Mat};
use crate::hopfcore::{regular_module, HModule, HopfAlgebra};
use crate::report::{mat_witness, Report};

use super::{validate_yd, YDModule, YdError};

/// `γ_V(x ⊗ v) = x₍₋₁₎.v ⊗ x₍₀₎`, a map `X ⊗ V → F(V) ⊗ X`.
pub fn half_braiding(x: &YDModule, v: &HModule) -> Mat {
    let (dx, dv) = (x.dim(), v.dim());
    let mut out = Mat::zeros(dv * dx, dx * dv);
    let cols: Vec<_> = v.action().iter().map(Mat::sparse_columns).collect();
    for xi in 0..dx {
        for (h, y, c) in x.coaction_terms(xi) {
            for vi in 0..dv {
                for (w, e) in &cols[*h][vi] {
                    *out.entry_mut(w * dx + y, xi * dv + vi) += &(c * e);
                }
            }
        }
    }
    out
}

/// The inverse `F(V) ⊗ X → X ⊗ V` of [`half_braiding`].
///
/// `γ⁻¹(v ⊗ x) = x₍₀₎ ⊗ S⁻¹(x₍₋₁₎) w v` with `w = S⁻¹(f̄₂) f̄₁`, summed over
/// `f2⁻¹ = f̄₁ ⊗ f̄₂`; for `f2 = 1 ⊗ 1` this is `w = 1`.
pub fn half_braiding_inverse(x: &YDModule, v: &HModule) -> Result<Mat, YdError> {
    let h = x.hopf();
    let s_inv = h.antipode_inverse().ok_or(YdError::MissingAntipodeInverse)?;
    let mut w = h.zero();
    for (p, q, c) in h.terms2(x.twist().f2_inv()) {
        let term = h.mul(&s_inv.col(q), &h.basis(p));
        for (o, t) in w.iter_mut().zip(term) {
            *o += &(&c * &t);
        }
    }
    let (dx, dv) = (x.dim(), v.dim());
    let rho_w = v.rho(&w);
    let mut out = Mat::zeros(dx * dv, dv * dx);
    for xi in 0..dx {
        for (hh, y, c) in x.coaction_terms(xi) {
            let m = &v.rho(&s_inv.col(*hh)) * &rho_w;
            for vi in 0..dv {
                for wi in 0..dv {
                    let e = m.get(wi, vi);
                    if !e.is_zero() {
                        *out.entry_mut(y * dv + wi, vi * dx + xi) += &(c * e);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `γ_V` intertwines `X ⊗ V` and `F(V) ⊗ X`, on every basis element of `H`.
pub fn check_half_braiding_linear(x: &YDModule, v: &HModule, gamma: &Mat, operands: &str) -> Report {
    let fv = v.pullback(x.twist().map());
    let src = x.module().tensor(v);
    let dst = fv.tensor(x.module());
    let h = x.hopf();
    let mut r = Report::new();
    if gamma.shape() != (dst.dim(), src.dim()) {
        r.check("half_braiding.linear", operands, Some(format!("map is {:?}", gamma.shape())));
        return r;
    }
    let bad = (0..h.dim()).find(|&i| dst.rho_basis(i) * gamma != gamma * src.rho_basis(i));
    r.check("half_braiding.linear", operands, bad.map(|i| format!("({})", h.label(i))));
    r
}

/// `(F²(V,W) ⊗ X) γ_{V⊗W} = (F(V) ⊗ γ_W)(γ_V ⊗ W)`, and `γ_k` is the flip.
pub fn check_half_braiding_axiom(x: &YDModule, v: &HModule, w: &HModule) -> Report {
    let operands = format!("{} with {}x{}", x.name(), v.dim(), w.dim());
    let (dx, dv, dw) = (x.dim(), v.dim(), w.dim());
    let f2_on_vw = rho_tensor2(x.hopf(), v, w, x.twist().f2());
    let lhs = &kron(&f2_on_vw, &Mat::identity(dx)) * &half_braiding(x, &v.tensor(w));
    let rhs = &kron(&Mat::identity(dv), &half_braiding(x, w)) * &kron(&half_braiding(x, v), &Mat::identity(dw));
    let mut r = Report::new();
    r.check("half_braiding.monoidal", &operands, mat_witness(&lhs, &rhs));
    let unit = crate::hopfcore::trivial_module(x.hopf());
    let flip = leg_permutation(&[dx, 1], &[1, 0]);
    r.check("half_braiding.unit", x.name(), mat_witness(&half_braiding(x, &unit), &flip));
    r
}

/// `(F(φ) ⊗ X) γ_V = γ_W (X ⊗ φ)` for a basis of module maps `φ: V → W`.
pub fn check_naturality(x: &YDModule, v: &HModule, w: &HModule) -> Report {
    let operands = format!("{} with {}->{}", x.name(), v.dim(), w.dim());
    let gv = half_braiding(x, v);
    let gw = half_braiding(x, w);
    let id = Mat::identity(x.dim());
    let maps = v.intertwiners(w);
    let bad = maps.iter().enumerate().find_map(|(k, phi)| {
        mat_witness(&(&kron(phi, &id) * &gv), &(&gw * &kron(&id, phi))).map(|m| format!("map {k}: {m}"))
    });
    let mut r = Report::new();
    r.check("half_braiding.natural", &operands, bad);
    r
}

/// Recovers a coaction from a half-braiding component at the regular module:
/// `δ(x) = γ(x ⊗ 1_H)`.
///
/// Fails when `gamma_reg` is not linear over `H`, when the result is not a valid
/// twisted Yetter-Drinfeld module, or when the result does not reproduce `gamma_reg`.
pub fn coaction_from_half_braiding(
    twist: Arc<ComonoidalAutomorphism>,
    x: &HModule,
    gamma_reg: &Mat,
    grade: Option<String>,
) -> Result<YDModule, YdError> {
    let h = twist.hopf().clone();
    let (n, d) = (h.dim(), x.dim());
    if gamma_reg.shape() != (n * d, d * n) {
        return Err(YdError::NotHalfBraiding(format!("component is {:?}", gamma_reg.shape())));
    }
    let reg = regular_module(&h);
    let mut coaction = Mat::zeros(n * d, d);
    for xi in 0..d {
        for (u, c) in h.unit().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for row in 0..n * d {
                let e = gamma_reg.get(row, xi * n + u);
                if !e.is_zero() {
                    *coaction.entry_mut(row, xi) += &(c * e);
                }
            }
        }
    }
    let yd = YDModule::new("from_half_braiding", twist, grade, x.clone(), coaction)?;
    let linear = check_half_braiding_linear(&yd, &reg, gamma_reg, "gamma_reg");
    if let Some(fail) = linear.failures().next() {
        return Err(YdError::NotHalfBraiding(format!("not H-linear at {}", fail.witness.clone().unwrap_or_default())));
    }
    let report = validate_yd(&yd);
    if let Some(fail) = report.failures().next() {
        return Err(YdError::NotHalfBraiding(format!("{} fails", fail.id)));
    }
    if let Some(w) = mat_witness(&half_braiding(&yd, &reg), gamma_reg) {
        return Err(YdError::NotHalfBraiding(format!("not determined by its value at 1: {w}")));
    }
    Ok(yd)
}

/// `Σ ρ_V(t₁) ⊗ ρ_W(t₂)` for `t ∈ H ⊗ H`.
pub(crate) fn rho_tensor2(h: &HopfAlgebra, v: &HModule, w: &HModule, t: &[crate::exactlin::Scalar]) -> Mat {
    let mut out = Mat::zeros(v.dim() * w.dim(), v.dim() * w.dim());
    for (p, q, c) in h.terms2(t) {
        out.add_scaled(&c, &kron(v.rho_basis(p), w.rho_basis(q)));
    }
    out
}
