use std::sync::Arc;

use crate::exactlin::tensor::basis_vector;
use crate::exactlin::{Mat, Scalar, Vector};
use crate::group::FiniteGroup;
use crate::hopfcore::{group_algebra, HopfAlgebra};
use crate::report::Report;

use super::automorphism::star_unchecked;
use super::gauge::gauge_report;
use super::{conjugate_by, AutoError, ComonoidalAutomorphism};

/// A group acting on `H`-mod through comonoidal automorphisms `f_g` and gauge
/// elements `b_{g,h}` relating `f_g ⋆ f_h` to `f_{gh}`.
///
/// Normalization (`f_e = id`, `f2_e = 1 ⊗ 1`, `b_{e,g} = b_{g,e} = 1`) is enforced
/// on construction.
#[derive(Clone, Debug)]
pub struct ActionData {
    name: String,
    group: FiniteGroup,
    hopf: Arc<HopfAlgebra>,
    autos: Vec<Arc<ComonoidalAutomorphism>>,
    gauges: Vec<Vector>,
    gauges_inv: Vec<Vector>,
}

impl ActionData {
    /// `gauges[g * |G| + h]` is `b_{g,h}`.
    pub fn new(
        name: impl Into<String>,
        group: FiniteGroup,
        autos: Vec<Arc<ComonoidalAutomorphism>>,
        gauges: Vec<Vector>,
    ) -> Result<Self, AutoError> {
        let m = group.order();
        if autos.len() != m || gauges.len() != m * m {
            return Err(AutoError::Shape(format!("need {m} automorphisms and {} gauge elements", m * m)));
        }
        let hopf = autos[0].hopf().clone();
        if autos.iter().any(|a| **a.hopf() != *hopf) {
            return Err(AutoError::Shape("automorphisms act on different Hopf algebras".into()));
        }
        if gauges.iter().any(|b| b.len() != hopf.dim()) {
            return Err(AutoError::Shape("gauge element of the wrong length".into()));
        }
        let e = group.identity();
        if !autos[e].is_identity() {
            return Err(AutoError::NotNormalized(format!("f at {} is not the identity", group.label(e))));
        }
        for g in group.elements() {
            if gauges[e * m + g] != *hopf.unit() || gauges[g * m + e] != *hopf.unit() {
                return Err(AutoError::NotNormalized(format!("b involving {} and {} is not 1", group.label(e), group.label(g))));
            }
        }
        let gauges_inv = gauges
            .iter()
            .map(|b| hopf.inverse_element(b).ok_or_else(|| AutoError::NotInvertible(hopf.format_element(b))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ActionData { name: name.into(), group, hopf, autos, gauges, gauges_inv })
    }

    /// Every `b_{g,h} = 1` and every `f2_g = 1 ⊗ 1`, with the given maps.
    pub fn strict(name: impl Into<String>, group: FiniteGroup, hopf: Arc<HopfAlgebra>, maps: Vec<Mat>) -> Result<Self, AutoError> {
        let autos = maps
            .into_iter()
            .enumerate()
            .map(|(g, f)| {
                ComonoidalAutomorphism::bialgebra(format!("f_{}", group.label(g)), hopf.clone(), f).map(Arc::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let m = group.order();
        let gauges = vec![hopf.unit().clone(); m * m];
        Self::new(name, group, autos, gauges)
    }

    /// The trivial group acting by the identity.
    pub fn trivial(hopf: Arc<HopfAlgebra>) -> Self {
        let n = hopf.dim();
        Self::strict("trivial", FiniteGroup::trivial(), hopf, vec![Mat::identity(n)]).expect("identity action")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn auto(&self, g: usize) -> &Arc<ComonoidalAutomorphism> {
        &self.autos[g]
    }

    pub fn autos(&self) -> &[Arc<ComonoidalAutomorphism>] {
        &self.autos
    }

    pub fn gauges(&self) -> &[Vector] {
        &self.gauges
    }

    /// `b_{g,h}`.
    pub fn b(&self, g: usize, h: usize) -> &Vector {
        &self.gauges[g * self.group.order() + h]
    }

    pub fn b_inv(&self, g: usize, h: usize) -> &Vector {
        &self.gauges_inv[g * self.group.order() + h]
    }

    /// No comonoidal structure and no gauge elements beyond `1`.
    pub fn is_strict(&self) -> bool {
        self.autos.iter().all(|a| a.has_trivial_f2()) && self.gauges.iter().all(|b| b == self.hopf.unit())
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Gauge condition per pair, cocycle condition per triple, and the normalization convention.
pub fn validate_action(a: &ActionData) -> Report {
    let g_ = a.group();
    let h = a.hopf();
    let mut r = Report::new();
    for g in g_.elements() {
        for k in g_.elements() {
            let operands = format!("{} b({},{})", a.name(), g_.label(g), g_.label(k));
            let star = star_unchecked(a.auto(g), a.auto(k));
            r.extend(gauge_report(&star, a.auto(g_.mul(g, k)), a.b(g, k), a.b_inv(g, k), &operands, "action.gauge"));
        }
    }
    for g in g_.elements() {
        for k in g_.elements() {
            for l in g_.elements() {
                let gk = g_.mul(g, k);
                let kl = g_.mul(k, l);
                let lhs = h.mul(a.b(gk, l), &a.auto(l).apply(a.b(g, k)));
                let rhs = h.mul(a.b(g, kl), a.b(k, l));
                let operands = format!("{} ({},{},{})", a.name(), g_.label(g), g_.label(k), g_.label(l));
                let witness = (lhs != rhs)
                    .then(|| format!("{} vs {}", h.format_element(&lhs), h.format_element(&rhs)));
                r.check("action.cocycle", &operands, witness);
            }
        }
    }
    let e = g_.identity();
    let normalized = a.auto(e).is_identity()
        && g_.elements().all(|g| a.b(e, g) == h.unit() && a.b(g, e) == h.unit());
    r.check(
        "action.normalization",
        &format!("{} (convention)", a.name()),
        (!normalized).then(|| "identity data not normalized".to_string()),
    );
    r
}

/// The action of `G = B/A` on `k[A]` from an extension `A → B → G` and a section `s`.
///
/// `section[0]` must be the identity of `B`; `G` is labelled by the section
/// representatives. The action is `f_g = ad_{s(g)⁻¹}` restricted to `A` with gauge
/// elements `b_{g,h} = s(gh)⁻¹ s(g) s(h)`, which satisfies the conditions with
/// composition `f_g ⋆ f_h = f_h ∘ f_g`.
pub fn exact_sequence_action(
    name: impl Into<String>,
    ambient: &FiniteGroup,
    normal: &[usize],
    section: &[usize],
) -> Result<ActionData, AutoError> {
    if !ambient.is_normal_subgroup(normal) {
        return Err(AutoError::BadExtension("not a normal subgroup".into()));
    }
    if section.first() != Some(&ambient.identity()) {
        return Err(AutoError::BadExtension("the section must send the identity to the identity".into()));
    }
    let coset_of = |b: usize| section.iter().position(|&s| normal.contains(&ambient.mul(ambient.inv(s), b)));
    if section.len() * normal.len() != ambient.order() || (0..section.len()).any(|i| coset_of(section[i]) != Some(i)) {
        return Err(AutoError::BadExtension("section does not pick one element per coset".into()));
    }
    let m = section.len();
    let table = (0..m)
        .map(|g| (0..m).map(|h| coset_of(ambient.mul(section[g], section[h])).unwrap()).collect())
        .collect();
    let labels = section.iter().map(|&s| ambient.label(s).to_string()).collect();
    let quotient = FiniteGroup::from_table(labels, table)?;
    let sub = ambient.subgroup(normal)?;
    let hopf = Arc::new(group_algebra(&sub));
    let n = normal.len();
    let pos = |x: usize| normal.iter().position(|&a| a == x).expect("element of the normal subgroup");

    let mut autos = Vec::with_capacity(m);
    for g in 0..m {
        let s = section[g];
        let mut f = Mat::zeros(n, n);
        for (i, &a) in normal.iter().enumerate() {
            f.set(pos(ambient.mul(ambient.mul(ambient.inv(s), a), s)), i, Scalar::one());
        }
        let label = format!("f_{}", quotient.label(g));
        autos.push(Arc::new(ComonoidalAutomorphism::bialgebra(label, hopf.clone(), f)?));
    }
    let mut gauges = Vec::with_capacity(m * m);
    for g in 0..m {
        for h in 0..m {
            let gh = quotient.mul(g, h);
            let c = ambient.mul(ambient.inv(section[gh]), ambient.mul(section[g], section[h]));
            gauges.push(basis_vector(n, pos(c)));
        }
    }
    ActionData::new(name, quotient, autos, gauges)
}

/// Transports an action along gauge transformations `a_g` from `f_g` (with `a_e = 1`).
///
/// The new automorphisms are `ad_{a_g} ∘ f_g` with the matching comonoidal structure,
/// and `b'_{g,h} = a_{gh} b_{g,h} (a_h f_h(a_g))⁻¹`.
pub fn conjugate_action(a: &ActionData, elements: &[Vector]) -> Result<ActionData, AutoError> {
    let g_ = a.group();
    let h = a.hopf();
    let m = g_.order();
    if elements.len() != m {
        return Err(AutoError::Shape(format!("need {m} gauge elements")));
    }
    let autos = g_
        .elements()
        .map(|g| {
            if g == g_.identity() {
                Ok(a.auto(g).clone())
            } else {
                conjugate_by(a.auto(g), &elements[g]).map(|c| Arc::new(c.renamed(format!("f'_{}", g_.label(g)))))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut gauges = Vec::with_capacity(m * m);
    for g in g_.elements() {
        for k in g_.elements() {
            let denom = h.mul(&elements[k], &a.auto(k).apply(&elements[g]));
            let denom_inv = h.inverse_element(&denom).ok_or_else(|| AutoError::NotInvertible(h.format_element(&denom)))?;
            gauges.push(h.mul_all(&[&elements[g_.mul(g, k)], a.b(g, k), &denom_inv]));
        }
    }
    ActionData::new(format!("{}'", a.name()), g_.clone(), autos, gauges)
}
