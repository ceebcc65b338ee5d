use std::sync::Arc;

use crate::autoact::{validate_comonoidal_automorphism, ComonoidalAutomorphism};
use crate::exactlin::{solve_inverse, Mat, Scalar, Vector};
use crate::hopfcore::{dual_cop, HModule, HopfAlgebra};
use crate::report::Report;
use crate::ydmod::YDModule;

use super::GDoubleError;

/// The algebra `D_f` on `H ⊗ H*`, basis `e_i ⊗ e^j` at index `i·n + j`, with
/// `(a ⊗ φ)(b ⊗ ψ) = a b₍₂₎ ⊗ φ(b₍₃₎ · – · (S⁻¹f)(b₍₁₎)) ψ` and unit `1 ⊗ ε`.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    twist: Arc<ComonoidalAutomorphism>,
    dual: Arc<HopfAlgebra>,
    mult: Mat,
    unit: Vector,
}

impl PartialEq for DoubleAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult && self.unit == other.unit && *self.twist == *other.twist
    }
}

/// `D_f` for a bialgebra automorphism `f` of `H`.
pub fn build_double(h: &Arc<HopfAlgebra>, f: &Mat) -> Result<DoubleAlgebra, GDoubleError> {
    let twist = ComonoidalAutomorphism::bialgebra("f", h.clone(), f.clone())
        .map_err(|e| GDoubleError::NotBialgebraAutomorphism(e.to_string()))?;
    DoubleAlgebra::from_twist(Arc::new(twist))
}

impl DoubleAlgebra {
    /// Requires `f2 = 1 ⊗ 1` and a valid bialgebra automorphism.
    pub fn from_twist(twist: Arc<ComonoidalAutomorphism>) -> Result<Self, GDoubleError> {
        if !twist.has_trivial_f2() {
            return Err(GDoubleError::NontrivialComonoidalStructure(twist.name().to_string()));
        }
        let report = validate_comonoidal_automorphism(&twist);
        if let Some(why) = report.failures().next().map(|f| format!("{} {}", f.id, f.witness.clone().unwrap_or_default())) {
            return Err(GDoubleError::NotBialgebraAutomorphism(why));
        }
        let h = twist.hopf().clone();
        let n = h.dim();
        let s_inv = h.antipode_inverse().ok_or(GDoubleError::MissingAntipodeInverse)?;
        let dual = Arc::new(dual_cop(&h).map_err(|e| GDoubleError::ValidationFailure(e.to_string()))?);
        let sf = s_inv * twist.map();
        let n2 = n * n;
        let mut mult = Mat::zeros(n2, n2 * n2);
        for k in 0..n {
            for (p, q, r, c) in h.coproduct2(k) {
                let sfp = sf.col(*p);
                for t in 0..n {
                    let w = h.mul(&h.mul(&h.basis(*r), &h.basis(t)), &sfp);
                    for (j, wj) in w.iter().enumerate() {
                        if wj.is_zero() {
                            continue;
                        }
                        let cw = c * wj;
                        for i in 0..n {
                            for (a, ca) in h.product(i, *q) {
                                let caw = &cw * ca;
                                for l in 0..n {
                                    for (u, cu) in crate::exactlin::tensor::sparse(h.comult().row(t * n + l)) {
                                        let col = (i * n + j) * n2 + (k * n + l);
                                        *mult.entry_mut(a * n + u, col) += &(&caw * &cu);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit = crate::exactlin::tensor::kron_vec(h.unit(), h.counit());
        Ok(DoubleAlgebra { twist, dual, mult, unit })
    }

    pub fn twist(&self) -> &Arc<ComonoidalAutomorphism> {
        &self.twist
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.twist.hopf()
    }

    /// `(H*)^cop` in the dual basis.
    pub fn dual(&self) -> &Arc<HopfAlgebra> {
        &self.dual
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    /// Structure constants: column `α·dim + β` holds `b_α b_β`.
    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, alpha: usize) -> Vector {
        crate::exactlin::tensor::basis_vector(self.dim(), alpha)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (a, ca) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = ca * cb;
                let col = a * d + b;
                for (r, o) in out.iter_mut().enumerate() {
                    let e = self.mult.get(r, col);
                    if !e.is_zero() {
                        *o += &(&s * e);
                    }
                }
            }
        }
        out
    }

    /// `ι(a) = a ⊗ ε`.
    pub fn iota(&self, a: &[Scalar]) -> Vector {
        crate::exactlin::tensor::kron_vec(a, self.hopf().counit())
    }

    /// `κ(φ) = 1 ⊗ φ`.
    pub fn kappa(&self, phi: &[Scalar]) -> Vector {
        crate::exactlin::tensor::kron_vec(self.hopf().unit(), phi)
    }

    /// Left multiplication by `u`.
    pub fn left_mult(&self, u: &[Scalar]) -> Mat {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|b| self.mul(u, &self.basis(b))).collect();
        Mat::from_columns(d, &cols)
    }
}

/// Associativity and unitality over all basis triples, and the algebra maps `ι`, `κ`.
pub fn validate_double(d: &DoubleAlgebra) -> Report {
    let h = d.hopf();
    let n = h.dim();
    let m = d.dim();
    let name = format!("D({})", d.twist().name());
    let label = |a: usize| format!("{}|{}", h.label(a / n), d.dual().label(a % n));
    let mut r = Report::new();

    let products: Vec<Vec<Vector>> =
        (0..m).map(|a| (0..m).map(|b| d.mul(&d.basis(a), &d.basis(b))).collect()).collect();
    let bad = (0..m * m * m).find(|&t| {
        let (a, b, c) = (t / (m * m), (t / m) % m, t % m);
        d.mul(&products[a][b], &d.basis(c)) != d.mul(&d.basis(a), &products[b][c])
    });
    r.check("double.associativity", &name, bad.map(|t| {
        format!("({}, {}, {})", label(t / (m * m)), label((t / m) % m), label(t % m))
    }));
    let bad = (0..m).find(|&a| d.mul(d.unit(), &d.basis(a)) != d.basis(a) || d.mul(&d.basis(a), d.unit()) != d.basis(a));
    r.check("double.unitality", &name, bad.map(|a| format!("({})", label(a))));

    let dual = d.dual();
    let bad = (0..n * n).find(|&t| {
        let (i, j) = (t / n, t % n);
        d.mul(&d.iota(&h.basis(i)), &d.iota(&h.basis(j))) != d.iota(&h.mul(&h.basis(i), &h.basis(j)))
    });
    let witness = bad
        .map(|t| format!("({}, {})", h.label(t / n), h.label(t % n)))
        .or_else(|| (d.iota(h.unit()) != *d.unit()).then(|| "iota(1) != 1".into()));
    r.check("double.iota_algebra_map", &name, witness);
    let bad = (0..n * n).find(|&t| {
        let (i, j) = (t / n, t % n);
        d.mul(&d.kappa(&dual.basis(i)), &d.kappa(&dual.basis(j))) != d.kappa(&dual.mul(&dual.basis(i), &dual.basis(j)))
    });
    let witness = bad
        .map(|t| format!("({}, {})", dual.label(t / n), dual.label(t % n)))
        .or_else(|| (d.kappa(dual.unit()) != *d.unit()).then(|| "kappa(eps) != 1".into()));
    r.check("double.kappa_algebra_map", &name, witness);
    let iota_img = Mat::from_columns(m, &(0..n).map(|i| d.iota(&h.basis(i))).collect::<Vec<_>>());
    let kappa_img = Mat::from_columns(m, &(0..n).map(|i| d.kappa(&dual.basis(i))).collect::<Vec<_>>());
    r.check(
        "double.embeddings_injective",
        &name,
        (iota_img.rank() != n || kappa_img.rank() != n).then(|| "an embedding has a kernel".into()),
    );
    r
}

/// A left `D_f`-module given by the action matrices of the basis `e_i ⊗ e^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleModule {
    double: Arc<DoubleAlgebra>,
    dim: usize,
    action: Vec<Mat>,
}

impl DoubleModule {
    pub fn new(double: Arc<DoubleAlgebra>, dim: usize, action: Vec<Mat>) -> Result<Self, GDoubleError> {
        if action.len() != double.dim() || action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(GDoubleError::Shape(format!("need {} matrices of size {dim}x{dim}", double.dim())));
        }
        Ok(DoubleModule { double, dim, action })
    }

    /// `D_f` acting on itself by left multiplication.
    pub fn regular(double: &Arc<DoubleAlgebra>) -> Self {
        let m = double.dim();
        let action = (0..m).map(|a| double.left_mult(&double.basis(a))).collect();
        DoubleModule { double: double.clone(), dim: m, action }
    }

    pub fn double(&self) -> &Arc<DoubleAlgebra> {
        &self.double
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn rho(&self, u: &[Scalar]) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (a, c) in u.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.action[a]);
            }
        }
        out
    }

    /// Restriction along an algebra map `φ: D' → D`, given by its matrix.
    pub fn pullback(&self, target: Arc<DoubleAlgebra>, map: &Mat) -> Self {
        let action = (0..target.dim()).map(|a| self.rho(&map.col(a))).collect();
        DoubleModule { double: target, dim: self.dim, action }
    }

    /// Unitality and multiplicativity over all basis pairs.
    pub fn validate(&self, name: &str) -> Report {
        let d = &self.double;
        let m = d.dim();
        let mut r = Report::new();
        r.check(
            "double_module.unital",
            name,
            (!self.rho(d.unit()).is_identity()).then(|| "unit does not act as the identity".into()),
        );
        let bad = (0..m * m).find(|&t| {
            let (a, b) = (t / m, t % m);
            self.rho(&d.mul(&d.basis(a), &d.basis(b))) != &self.action[a] * &self.action[b]
        });
        r.check("double_module.multiplicative", name, bad.map(|t| format!("(b{}, b{})", t / m, t % m)));
        r
    }
}

/// `(a ⊗ φ).x = (φ ∘ S⁻¹)(x₍₋₁₎) a.x₍₀₎`.
pub fn yd_to_double_module(double: &Arc<DoubleAlgebra>, x: &YDModule) -> Result<DoubleModule, GDoubleError> {
    if !x.twist().has_trivial_f2() {
        return Err(GDoubleError::NontrivialComonoidalStructure(x.twist().name().to_string()));
    }
    if **x.twist() != **double.twist() {
        return Err(GDoubleError::Shape(format!("{} is not twisted by the automorphism of the double", x.name())));
    }
    let h = x.hopf();
    let n = h.dim();
    let d = x.dim();
    let s_inv = h.antipode_inverse().ok_or(GDoubleError::MissingAntipodeInverse)?;
    let c_h: Vec<Mat> = (0..n)
        .map(|hh| Mat::from_fn(d, d, |y, xi| x.coaction().get(hh * d + y, xi).clone()))
        .collect();
    let c_j: Vec<Mat> = (0..n)
        .map(|j| {
            let mut m = Mat::zeros(d, d);
            for (hh, c) in c_h.iter().enumerate() {
                let s = s_inv.get(j, hh);
                if !s.is_zero() {
                    m.add_scaled(s, c);
                }
            }
            m
        })
        .collect();
    let action = (0..n * n).map(|t| x.action(t / n) * &c_j[t % n]).collect();
    DoubleModule::new(double.clone(), d, action)
}

/// `a.x = (a ⊗ ε).x` and `δ(x) = Σᵢ S(e_i) ⊗ (1 ⊗ e^i).x`.
pub fn double_module_to_yd(m: &DoubleModule) -> Result<YDModule, GDoubleError> {
    let n = m.double().hopf().dim();
    coaction_with_basis(m, &Mat::identity(n))
}

/// [`double_module_to_yd`] computed with the basis `a_i` = columns of `basis` and its
/// dual basis `a^i` = rows of `basis⁻¹`.
pub fn coaction_with_basis(m: &DoubleModule, basis: &Mat) -> Result<YDModule, GDoubleError> {
    let dbl = m.double();
    let h = dbl.hopf();
    let n = h.dim();
    let d = m.dim();
    let s = h.antipode().ok_or(GDoubleError::MissingAntipode)?;
    let p_inv = solve_inverse(basis).map_err(|_| GDoubleError::Shape("basis change is singular".into()))?;
    let action: Vec<Mat> = (0..n).map(|i| m.rho(&dbl.iota(&h.basis(i)))).collect();
    let mut coaction = Mat::zeros(n * d, d);
    for i in 0..n {
        let s_ai = s.apply(&basis.col(i));
        let rho = m.rho(&dbl.kappa(p_inv.row(i)));
        for (hh, c) in s_ai.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for y in 0..d {
                for xi in 0..d {
                    let e = rho.get(y, xi);
                    if !e.is_zero() {
                        *coaction.entry_mut(hh * d + y, xi) += &(c * e);
                    }
                }
            }
        }
    }
    let module = HModule::new(h.clone(), d, action).map_err(|e| GDoubleError::Shape(e.to_string()))?;
    Ok(YDModule::new("from_double", dbl.twist().clone(), None, module, coaction)?)
}
