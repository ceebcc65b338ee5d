use std::sync::Arc;

use crate::autoact::ComonoidalAutomorphism;
use crate::exactlin::tensor::basis_vector;
use crate::exactlin::{Mat, Scalar, Vector};
use crate::hopfcore::{CoalgebraData, HComodule, HModule, HopfAlgebra};
use crate::report::Report;

use super::YdError;

/// Coaction terms `(h, y, c)` meaning `c · e_h ⊗ e_y`.
pub type CoactionTerms = Vec<(usize, usize, Scalar)>;

/// An `H`-module with an `H^{f2}`-coaction for a twist `(f, f2)`.
///
/// The coaction matrix is `(n·d) × d`; column `x` holds `δ(e_x) = x₍₋₁₎ ⊗ x₍₀₎`
/// flattened with the `H` leg first.
#[derive(Clone, Debug)]
pub struct YDModule {
    name: String,
    twist: Arc<ComonoidalAutomorphism>,
    grade: Option<String>,
    module: HModule,
    coaction: Mat,
    terms: Vec<CoactionTerms>,
}

impl PartialEq for YDModule {
    /// Same twist, grade, action and coaction; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.grade == other.grade
            && self.module == other.module
            && self.coaction == other.coaction
            && *self.twist == *other.twist
    }
}

impl YDModule {
    pub fn new(
        name: impl Into<String>,
        twist: Arc<ComonoidalAutomorphism>,
        grade: Option<String>,
        module: HModule,
        coaction: Mat,
    ) -> Result<Self, YdError> {
        let n = twist.hopf().dim();
        let d = module.dim();
        if **module.hopf() != **twist.hopf() {
            return Err(YdError::Shape("module and twist live over different Hopf algebras".into()));
        }
        if coaction.shape() != (n * d, d) {
            return Err(YdError::Shape(format!("coaction is {:?}, expected {:?}", coaction.shape(), (n * d, d))));
        }
        let terms = coaction
            .sparse_columns()
            .into_iter()
            .map(|col| col.into_iter().map(|(k, c)| (k / d, k % d, c)).collect())
            .collect();
        Ok(YDModule { name: name.into(), twist, grade, module, coaction, terms })
    }

    /// Builds from action matrices `ρ(e_i)`.
    pub fn from_action(
        name: impl Into<String>,
        twist: Arc<ComonoidalAutomorphism>,
        grade: Option<String>,
        action: Vec<Mat>,
        coaction: Mat,
    ) -> Result<Self, YdError> {
        let d = coaction.cols();
        let module = HModule::new(twist.hopf().clone(), d, action).map_err(|e| YdError::Shape(e.to_string()))?;
        Self::new(name, twist, grade, module, coaction)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_grade(mut self, grade: Option<String>) -> Self {
        self.grade = grade;
        self
    }

    pub fn grade(&self) -> Option<&str> {
        self.grade.as_deref()
    }

    pub fn twist(&self) -> &Arc<ComonoidalAutomorphism> {
        &self.twist
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.twist.hopf()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &HModule {
        &self.module
    }

    pub fn action(&self, i: usize) -> &Mat {
        self.module.rho_basis(i)
    }

    pub fn coaction(&self) -> &Mat {
        &self.coaction
    }

    /// `δ(e_x)` as sparse terms.
    pub fn coaction_terms(&self, x: usize) -> &CoactionTerms {
        &self.terms[x]
    }

    /// `δ(v)` for an arbitrary vector, as sparse terms.
    pub fn coact(&self, v: &[Scalar]) -> CoactionTerms {
        let mut acc = vec![Scalar::zero(); self.coaction.rows()];
        let d = self.dim();
        for (x, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (h, y, e) in &self.terms[x] {
                acc[h * d + y] += &(c * e);
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k / d, k % d, c))
            .collect()
    }

    /// `H^{f2}` comultiplication, without re-validating it.
    pub fn twisted_comult(&self) -> CoalgebraData {
        let h = self.hopf();
        let n = h.dim();
        let cols: Vec<Vector> = (0..n).map(|i| h.mul_tensor(self.twist.f2(), &h.comult().col(i), 2)).collect();
        CoalgebraData { dim: n, comult: Mat::from_columns(n * n, &cols), counit: h.counit().clone() }
    }
}

/// Adds `c · a ⊗ x` to a vector in `H ⊗ X` (`H` leg first).
pub(crate) fn add_tensor(out: &mut [Scalar], a: &[Scalar], x: &[Scalar], c: &Scalar) {
    let d = x.len();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let s = c * ai;
        for (j, xj) in x.iter().enumerate() {
            if !xj.is_zero() {
                out[i * d + j] += &(&s * xj);
            }
        }
    }
}

/// Module, comodule and compatibility axioms.
///
/// The compatibility condition is checked on every basis pair `(e_i, e_x)` in the
/// form `f(a₍₁₎)x₍₋₁₎ ⊗ a₍₂₎x₍₀₎ = (a₍₁₎x)₍₋₁₎a₍₂₎ ⊗ (a₍₁₎x)₍₀₎`. When an antipode is
/// present the equivalent form `(ax)₍₋₁₎ ⊗ (ax)₍₀₎ = f(a₍₁₎)x₍₋₁₎S(a₍₃₎) ⊗ a₍₂₎x₍₀₎` is
/// checked as well, and the two verdicts must agree.
pub fn validate_yd(x: &YDModule) -> Report {
    let name = x.name();
    let mut r = x.module().validate(name);
    let comodule = HComodule { coalgebra: x.twisted_comult(), dim: x.dim(), coaction: x.coaction().clone() };
    r.extend(comodule.validate(name));

    let h = x.hopf();
    let (n, d) = (h.dim(), x.dim());
    let f = x.twist().map();
    let pairs = || (0..n).flat_map(move |i| (0..d).map(move |v| (i, v)));
    let label = |(i, v): (usize, usize)| format!("({}, x{v})", h.label(i));

    let first = pairs().find(|&(i, v)| {
        let mut lhs = vec![Scalar::zero(); n * d];
        let mut rhs = vec![Scalar::zero(); n * d];
        for (pq, c) in h.coproduct(i) {
            let (p, q) = (pq / n, pq % n);
            let fp = f.col(p);
            for (hh, y, e) in x.coaction_terms(v) {
                add_tensor(&mut lhs, &h.mul(&fp, &h.basis(*hh)), &x.action(q).col(*y), &(c * e));
            }
            let z = x.action(p).col(v);
            for (hh, w, e) in x.coact(&z) {
                add_tensor(&mut rhs, &h.mul(&h.basis(hh), &h.basis(q)), &basis_vector(d, w), &(c * &e));
            }
        }
        lhs != rhs
    });
    let compat_pass = first.is_none();
    r.check("yd.compatibility", name, first.map(label));

    if let Some(s) = h.antipode() {
        let first = pairs().find(|&(i, v)| {
            let mut lhs = vec![Scalar::zero(); n * d];
            for (hh, w, e) in x.coact(&x.action(i).col(v)) {
                add_tensor(&mut lhs, &h.basis(hh), &basis_vector(d, w), &e);
            }
            let mut rhs = vec![Scalar::zero(); n * d];
            for (p, q, rr, c) in h.coproduct2(i) {
                let fp = f.col(*p);
                let sr = s.col(*rr);
                for (hh, y, e) in x.coaction_terms(v) {
                    let elem = h.mul(&h.mul(&fp, &h.basis(*hh)), &sr);
                    add_tensor(&mut rhs, &elem, &x.action(*q).col(*y), &(c * e));
                }
            }
            lhs != rhs
        });
        let antipode_pass = first.is_none();
        r.check("yd.compatibility_antipode_form", name, first.map(label));
        r.check(
            "yd.forms_agree",
            name,
            (compat_pass != antipode_pass)
                .then(|| format!("compatibility {compat_pass}, antipode form {antipode_pass}")),
        );
    }
    r
}

/// The trivial module `k`: `a.1 = ε(a)`, `δ(1) = 1 ⊗ 1`.
pub fn trivial_yd(twist: Arc<ComonoidalAutomorphism>) -> YDModule {
    let h = twist.hopf().clone();
    let action = h.counit().iter().map(|e| Mat::from_rows(vec![vec![e.clone()]])).collect();
    let coaction = Mat::column_vector(h.unit());
    YDModule::from_action("k", twist, None, action, coaction).expect("shapes are consistent")
}

/// `H` with `a.v = f(a₍₁₎) v S(a₍₂₎)` and coaction `Δ^{f2}`.
pub fn twisted_adjoint(twist: Arc<ComonoidalAutomorphism>) -> Result<YDModule, YdError> {
    let h = twist.hopf().clone();
    let n = h.dim();
    let s = h.antipode().ok_or(YdError::MissingAntipode)?;
    let f = twist.map();
    let action = (0..n)
        .map(|i| {
            let cols: Vec<Vector> = (0..n)
                .map(|v| {
                    let mut out = h.zero();
                    for (pq, c) in h.coproduct(i) {
                        let term = h.mul(&h.mul(&f.col(pq / n), &h.basis(v)), &s.col(pq % n));
                        for (o, t) in out.iter_mut().zip(term) {
                            *o += &(c * &t);
                        }
                    }
                    out
                })
                .collect();
            Mat::from_columns(n, &cols)
        })
        .collect();
    let cols: Vec<Vector> = (0..n).map(|i| h.mul_tensor(twist.f2(), &h.comult().col(i), 2)).collect();
    let coaction = Mat::from_columns(n * n, &cols);
    YDModule::from_action("ad", twist, None, action, coaction)
}

/// A linear map between two twisted Yetter-Drinfeld modules.
#[derive(Clone, Debug)]
pub struct YDMorphism {
    pub source: YDModule,
    pub target: YDModule,
    pub map: Mat,
}

impl YDMorphism {
    pub fn validate(&self) -> Report {
        validate_yd_morphism(&self.source, &self.target, &self.map)
    }
}

/// `φ(a.x) = a.φ(x)` and `(id ⊗ φ)δ = δφ`, over all basis elements.
pub fn validate_yd_morphism(source: &YDModule, target: &YDModule, map: &Mat) -> Report {
    let operands = format!("{} -> {}", source.name(), target.name());
    let mut r = Report::new();
    if map.shape() != (target.dim(), source.dim()) {
        r.check("yd_morphism.shape", &operands, Some(format!("map is {:?}", map.shape())));
        return r;
    }
    let h = source.hopf();
    let n = h.dim();
    let action = (0..n).find(|&i| map * source.action(i) != target.action(i) * map);
    r.check("yd_morphism.action", &operands, action.map(|i| format!("({})", h.label(i))));
    let lifted = crate::exactlin::kron(&Mat::identity(n), map);
    let coaction = (&lifted * source.coaction()).first_difference(&(target.coaction() * map));
    r.check("yd_morphism.coaction", &operands, coaction.map(|(_, j)| format!("x{j}")));
    r
}
