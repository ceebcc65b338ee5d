use std::sync::Arc;

use crate::exactlin::tensor::basis_vector;
use crate::exactlin::{kron, Mat, Scalar, Vector};
use crate::report::Report;

use super::{HopfAlgebra, HopfError};

/// A left module over a Hopf algebra, by the matrices `ρ(e_i)`.
#[derive(Clone, Debug)]
pub struct HModule {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    action: Vec<Mat>,
}

impl PartialEq for HModule {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.action == other.action && *self.hopf == *other.hopf
    }
}

impl HModule {
    pub fn new(hopf: Arc<HopfAlgebra>, dim: usize, action: Vec<Mat>) -> Result<Self, HopfError> {
        if action.len() != hopf.dim() || action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(HopfError::ShapeMismatch(format!(
                "module action needs {} matrices of size {dim}x{dim}",
                hopf.dim()
            )));
        }
        Ok(HModule { hopf, dim, action })
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    /// `ρ(e_i)`.
    pub fn rho_basis(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    /// `ρ(a)` for an arbitrary element `a`.
    pub fn rho(&self, a: &[Scalar]) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            out.add_scaled(c, &self.action[i]);
        }
        out
    }

    /// `a.x` for an element `a` and a vector `x`.
    pub fn act(&self, a: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(self.action[i].apply(x)) {
                *o += &(c * &y);
            }
        }
        out
    }

    /// Unitality and multiplicativity of `a ↦ ρ(a)`, over all basis pairs.
    pub fn validate(&self, name: &str) -> Report {
        let h = &self.hopf;
        let n = h.dim();
        let mut r = Report::new();
        r.check(
            "module.unital",
            name,
            (!self.rho(h.unit()).is_identity()).then(|| "rho(1) is not the identity".to_string()),
        );
        let bad = (0..n * n).find(|k| {
            let (i, j) = (k / n, k % n);
            self.rho(&h.mul(&basis_vector(n, i), &basis_vector(n, j))) != &self.action[i] * &self.action[j]
        });
        r.check(
            "module.multiplicative",
            name,
            bad.map(|k| format!("({}, {})", h.label(k / n), h.label(k % n))),
        );
        r
    }

    /// `X ⊗ Y` with `a.(x ⊗ y) = a₍₁₎x ⊗ a₍₂₎y`.
    pub fn tensor(&self, other: &HModule) -> HModule {
        let n = self.hopf.dim();
        let d = self.dim * other.dim;
        let action = (0..n)
            .map(|i| {
                let mut m = Mat::zeros(d, d);
                for (pq, c) in self.hopf.coproduct(i) {
                    m.add_scaled(c, &kron(&self.action[pq / n], &other.action[pq % n]));
                }
                m
            })
            .collect();
        HModule { hopf: self.hopf.clone(), dim: d, action }
    }

    /// The module with action `a.x = ρ(f(a))x`.
    pub fn pullback(&self, f: &Mat) -> HModule {
        let action = (0..self.hopf.dim()).map(|i| self.rho(&f.col(i))).collect();
        HModule { hopf: self.hopf.clone(), dim: self.dim, action }
    }

    /// `Hom_H(self, other)`: a basis of module maps, from the intertwiner equations.
    pub fn intertwiners(&self, other: &HModule) -> Vec<Mat> {
        let (dv, dw) = (self.dim, other.dim);
        let unknowns = dw * dv;
        let mut rows = Vec::new();
        for i in 0..self.hopf.dim() {
            let (rv, rw) = (&self.action[i], &other.action[i]);
            // (ρ_W(e_i) φ - φ ρ_V(e_i))[r, c] = 0, with φ[p, q] at unknown p*dv + q
            for r in 0..dw {
                for c in 0..dv {
                    let mut row = vec![Scalar::zero(); unknowns];
                    for p in 0..dw {
                        row[p * dv + c] += rw.get(r, p);
                    }
                    for q in 0..dv {
                        row[r * dv + q] -= rv.get(q, c);
                    }
                    rows.push(row);
                }
            }
        }
        if unknowns == 0 {
            return Vec::new();
        }
        let system = Mat::try_from_rows(rows, unknowns).expect("rows have equal length");
        system
            .nullspace()
            .into_iter()
            .map(|v| Mat::from_fn(dw, dv, |p, q| v[p * dv + q].clone()))
            .collect()
    }
}

/// `ₕH`: the Hopf algebra acting on itself by left multiplication.
pub fn regular_module(h: &Arc<HopfAlgebra>) -> HModule {
    let n = h.dim();
    let action = (0..n).map(|i| h.left_mult(&h.basis(i))).collect();
    HModule { hopf: h.clone(), dim: n, action }
}

/// `k` with `a.1 = ε(a)`.
pub fn trivial_module(h: &Arc<HopfAlgebra>) -> HModule {
    let action = h.counit().iter().map(|e| Mat::from_rows(vec![vec![e.clone()]])).collect();
    HModule { hopf: h.clone(), dim: 1, action }
}

/// A coalgebra by structure constants: `comult` is `n² × n`, `counit` a row of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub dim: usize,
    pub comult: Mat,
    pub counit: Vector,
}

impl CoalgebraData {
    pub fn of_hopf(h: &HopfAlgebra) -> Self {
        CoalgebraData { dim: h.dim(), comult: h.comult().clone(), counit: h.counit().clone() }
    }

    fn delta_leg(&self, u: &[Scalar], legs: usize, leg: usize) -> Vector {
        let dims = vec![self.dim; legs];
        let mut maps = vec![None; legs];
        maps[leg] = Some(&self.comult);
        crate::exactlin::tensor::apply_legwise(&dims, &maps, u)
    }

    fn eps_leg(&self, u: &[Scalar], legs: usize, leg: usize) -> Vector {
        let dims = vec![self.dim; legs];
        let counit = Mat::row_vector(&self.counit);
        let mut maps = vec![None; legs];
        maps[leg] = Some(&counit);
        crate::exactlin::tensor::apply_legwise(&dims, &maps, u)
    }

    /// Coassociativity and counitality on every basis element; witnesses are basis indices.
    pub fn validate(&self, name: &str) -> Report {
        let mut r = Report::new();
        let coassoc = (0..self.dim).find(|&i| {
            let d = self.comult.col(i);
            self.delta_leg(&d, 2, 0) != self.delta_leg(&d, 2, 1)
        });
        r.check("coalgebra.coassociativity", name, coassoc.map(|i| format!("basis {i}")));
        let counital = (0..self.dim).find(|&i| {
            let d = self.comult.col(i);
            let e = basis_vector(self.dim, i);
            self.eps_leg(&d, 2, 0) != e || self.eps_leg(&d, 2, 1) != e
        });
        r.check("coalgebra.counitality", name, counital.map(|i| format!("basis {i}")));
        r
    }
}

/// `H^{f2}`: comultiplication `a ↦ f2·Δ(a)` with the counit of `H`.
///
/// Fails with the first failing axiom when the result is not a coalgebra.
pub fn twisted_coalgebra(h: &HopfAlgebra, f2: &[Scalar]) -> Result<CoalgebraData, HopfError> {
    let n = h.dim();
    if f2.len() != n * n {
        return Err(HopfError::ShapeMismatch(format!("f2 has length {}, expected {}", f2.len(), n * n)));
    }
    let cols: Vec<Vector> = (0..n).map(|i| h.mul_tensor(f2, &h.comult().col(i), 2)).collect();
    let c = CoalgebraData { dim: n, comult: Mat::from_columns(n * n, &cols), counit: h.counit().clone() };
    let report = c.validate(h.name());
    let failure = report.failures().next().map(|f| format!("{} at {}", f.id, f.witness.clone().unwrap_or_default()));
    match failure {
        None => Ok(c),
        Some(w) => Err(HopfError::CocycleViolation(w)),
    }
}

/// A left comodule: `coaction` is `(n·d) × d`, column `x` is `δ(e_x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComodule {
    pub coalgebra: CoalgebraData,
    pub dim: usize,
    pub coaction: Mat,
}

impl HComodule {
    /// `(Δ⊗id)δ = (id⊗δ)δ` and `(ε⊗id)δ = id`.
    pub fn validate(&self, name: &str) -> Report {
        let (n, d) = (self.coalgebra.dim, self.dim);
        let mut r = Report::new();
        if self.coaction.shape() != (n * d, d) {
            r.check("comodule.shape", name, Some(format!("coaction is {:?}", self.coaction.shape())));
            return r;
        }
        let dims = [n, d];
        let coassoc = (0..d).find(|&x| {
            let v = self.coaction.col(x);
            let lhs = crate::exactlin::tensor::apply_legwise(&dims, &[Some(&self.coalgebra.comult), None], &v);
            let rhs = crate::exactlin::tensor::apply_legwise(&dims, &[None, Some(&self.coaction)], &v);
            lhs != rhs
        });
        r.check("comodule.coassociativity", name, coassoc.map(|x| format!("basis {x}")));
        let counit = Mat::row_vector(&self.coalgebra.counit);
        let counital = (0..d).find(|&x| {
            let v = self.coaction.col(x);
            crate::exactlin::tensor::apply_legwise(&dims, &[Some(&counit), None], &v) != basis_vector(d, x)
        });
        r.check("comodule.counitality", name, counital.map(|x| format!("basis {x}")));
        r
    }
}
