use std::sync::Arc;

use crate::exactlin::tensor::kron_vec;
use crate::exactlin::{Scalar, Vector};
use crate::report::Report;

use super::automorphism::tensor_witness;
use super::{AutoError, ComonoidalAutomorphism};

/// An invertible `a ∈ H` with `ad_a ∘ f = g` and `g2 · Δ(a) = (a ⊗ a) · f2`.
#[derive(Clone, Debug)]
pub struct GaugeTransformation {
    pub source: Arc<ComonoidalAutomorphism>,
    pub target: Arc<ComonoidalAutomorphism>,
    pub a: Vector,
    pub a_inv: Vector,
}

impl GaugeTransformation {
    pub fn new(
        source: Arc<ComonoidalAutomorphism>,
        target: Arc<ComonoidalAutomorphism>,
        a: Vector,
    ) -> Result<Self, AutoError> {
        let h = source.hopf();
        let a_inv = h.inverse_element(&a).ok_or_else(|| AutoError::NotInvertible(h.format_element(&a)))?;
        Ok(GaugeTransformation { source, target, a, a_inv })
    }

    /// `b · a`, a gauge transformation from `self.source` to `next.target`.
    pub fn then(&self, next: &GaugeTransformation) -> GaugeTransformation {
        let h = self.source.hopf();
        GaugeTransformation {
            source: self.source.clone(),
            target: next.target.clone(),
            a: h.mul(&next.a, &self.a),
            a_inv: h.mul(&self.a_inv, &next.a_inv),
        }
    }
}

pub fn validate_gauge(t: &GaugeTransformation) -> Report {
    let operands = format!("{} -> {}", t.source.name(), t.target.name());
    gauge_report(&t.source, &t.target, &t.a, &t.a_inv, &operands, "gauge")
}

pub(crate) fn gauge_report(
    source: &ComonoidalAutomorphism,
    target: &ComonoidalAutomorphism,
    a: &[Scalar],
    a_inv: &[Scalar],
    operands: &str,
    prefix: &str,
) -> Report {
    let h = source.hopf();
    let n = h.dim();
    let mut r = Report::new();
    let inverse_ok = h.mul(a, a_inv) == *h.unit() && h.mul(a_inv, a) == *h.unit();
    r.check(&format!("{prefix}.inverse"), operands, (!inverse_ok).then(|| format!("a = {}", h.format_element(a))));

    let conj = (0..n).find(|&i| h.conjugate(a, a_inv, &source.map().col(i)) != target.map().col(i));
    r.check(&format!("{prefix}.conjugation"), operands, conj.map(|i| format!("({})", h.label(i))));

    let lhs = h.mul_tensor(target.f2(), &h.delta(a), 2);
    let rhs = h.mul_tensor(&kron_vec(a, a), source.f2(), 2);
    r.check(&format!("{prefix}.comonoidal"), operands, tensor_witness(h, &lhs, &rhs, 2));
    r
}
