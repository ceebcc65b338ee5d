use std::sync::Arc;

use crate::exactlin::tensor::basis_vector;
use crate::exactlin::{solve_inverse, Mat, Scalar, Vector};
use crate::hopfcore::{twisted_coalgebra, CoalgebraData, HModule, HopfAlgebra, HopfError};
use crate::report::Report;

use super::AutoError;

/// A pair `(f, f2)`: an algebra automorphism of `H` and an invertible `f2 ∈ H ⊗ H`
/// controlling how far `f` is from preserving `Δ`.
#[derive(Clone, Debug)]
pub struct ComonoidalAutomorphism {
    name: String,
    hopf: Arc<HopfAlgebra>,
    map: Mat,
    map_inv: Option<Mat>,
    f2: Vector,
    f2_inv: Vector,
}

impl PartialEq for ComonoidalAutomorphism {
    /// Equal data over structurally equal Hopf algebras; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.f2 == other.f2 && self.f2_inv == other.f2_inv && *self.hopf == *other.hopf
    }
}

impl ComonoidalAutomorphism {
    /// Computes `f2⁻¹` in `H ⊗ H`.
    pub fn new(name: impl Into<String>, hopf: Arc<HopfAlgebra>, map: Mat, f2: Vector) -> Result<Self, AutoError> {
        let n = hopf.dim();
        if f2.len() != n * n {
            return Err(AutoError::Shape(format!("f2 has length {}, expected {}", f2.len(), n * n)));
        }
        let f2_inv = hopf.inverse_tensor(&f2, 2).ok_or(AutoError::NotInvertible("f2".into()))?;
        Self::with_f2_inverse(name, hopf, map, f2, f2_inv)
    }

    /// Uses a caller-supplied `f2⁻¹`; the pairing is checked by validation, not here.
    pub fn with_f2_inverse(
        name: impl Into<String>,
        hopf: Arc<HopfAlgebra>,
        map: Mat,
        f2: Vector,
        f2_inv: Vector,
    ) -> Result<Self, AutoError> {
        let n = hopf.dim();
        if map.shape() != (n, n) || f2.len() != n * n || f2_inv.len() != n * n {
            return Err(AutoError::Shape(format!("expected a {n}x{n} map and tensors of length {}", n * n)));
        }
        let map_inv = solve_inverse(&map).ok();
        Ok(ComonoidalAutomorphism { name: name.into(), hopf, map, map_inv, f2, f2_inv })
    }

    /// A bialgebra automorphism: `f2 = 1 ⊗ 1`.
    pub fn bialgebra(name: impl Into<String>, hopf: Arc<HopfAlgebra>, map: Mat) -> Result<Self, AutoError> {
        let one = hopf.unit_tensor(2);
        Self::with_f2_inverse(name, hopf, map, one.clone(), one)
    }

    pub fn identity(hopf: Arc<HopfAlgebra>) -> Self {
        let n = hopf.dim();
        Self::bialgebra("id", hopf, Mat::identity(n)).expect("identity has the right shape")
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn map(&self) -> &Mat {
        &self.map
    }

    pub fn map_inverse(&self) -> Option<&Mat> {
        self.map_inv.as_ref()
    }

    pub fn f2(&self) -> &Vector {
        &self.f2
    }

    pub fn f2_inv(&self) -> &Vector {
        &self.f2_inv
    }

    pub fn apply(&self, a: &[Scalar]) -> Vector {
        self.map.apply(a)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity() && self.has_trivial_f2()
    }

    pub fn has_trivial_f2(&self) -> bool {
        self.f2 == self.hopf.unit_tensor(2)
    }

    /// `H^{f2}`.
    pub fn coalgebra(&self) -> Result<CoalgebraData, HopfError> {
        twisted_coalgebra(&self.hopf, &self.f2)
    }
}

/// The five defining conditions, plus `f2 · f2⁻¹ = 1 ⊗ 1`.
pub fn validate_comonoidal_automorphism(phi: &ComonoidalAutomorphism) -> Report {
    let h = phi.hopf();
    let n = h.dim();
    let name = phi.name();
    let e = |i: usize| basis_vector(n, i);
    let f = phi.map();
    let mut r = Report::new();

    let not_unital = f.apply(h.unit()) != *h.unit();
    let mult_fail = (0..n * n).find(|k| {
        let (i, j) = (k / n, k % n);
        f.apply(&h.mul(&e(i), &e(j))) != h.mul(&f.col(i), &f.col(j))
    });
    let witness = if not_unital {
        Some("f(1) != 1".to_string())
    } else {
        mult_fail.map(|k| format!("({}, {})", h.label(k / n), h.label(k % n)))
    };
    r.check("auto.algebra_map", name, witness);
    r.check("auto.invertible", name, phi.map_inverse().is_none().then(|| "f is singular".to_string()));

    let compat = (0..n).find(|&i| {
        let lhs = h.mul_tensor(&h.mul_tensor(phi.f2(), &h.delta(&f.col(i)), 2), phi.f2_inv(), 2);
        lhs != h.map_legs(f, &h.delta(&e(i)), 2)
    });
    r.check("auto.comult_compat", name, compat.map(|i| format!("({})", h.label(i))));

    let counit = (0..n).find(|&i| h.eps(&f.col(i)) != h.counit()[i]);
    r.check("auto.counit", name, counit.map(|i| format!("({})", h.label(i))));

    let one = h.unit_tensor(1);
    let lhs = h.mul_tensor(&crate::exactlin::tensor::kron_vec(phi.f2(), &one), &h.delta_leg(phi.f2(), 2, 0), 3);
    let rhs = h.mul_tensor(&crate::exactlin::tensor::kron_vec(&one, phi.f2()), &h.delta_leg(phi.f2(), 2, 1), 3);
    r.check("auto.cocycle", name, tensor_witness(h, &lhs, &rhs, 3));

    let left = h.eps_leg(phi.f2(), 2, 0);
    let right = h.eps_leg(phi.f2(), 2, 1);
    let normal = if left != *h.unit() {
        Some(format!("(eps x id)(f2) = {}", h.format_element(&left)))
    } else if right != *h.unit() {
        Some(format!("(id x eps)(f2) = {}", h.format_element(&right)))
    } else {
        None
    };
    r.check("auto.normality", name, normal);

    let prod = h.mul_tensor(phi.f2(), phi.f2_inv(), 2);
    r.check("auto.f2_inverse", name, tensor_witness(h, &prod, &h.unit_tensor(2), 2));
    r
}

/// First differing coordinate of two tensors in `H^{⊗legs}`, named by basis labels.
pub(crate) fn tensor_witness(h: &HopfAlgebra, lhs: &[Scalar], rhs: &[Scalar], legs: usize) -> Option<String> {
    let n = h.dim();
    let k = lhs.iter().zip(rhs).position(|(a, b)| a != b)?;
    let idx = crate::exactlin::tensor::unflatten(&vec![n; legs], k);
    let names: Vec<&str> = idx.iter().map(|&i| h.label(i)).collect();
    Some(format!("coefficient of {}: {} vs {}", names.join(" x "), lhs[k], rhs[k]))
}

/// `(f, f2) ⋆ (g, g2) = (g ∘ f, (g ⊗ g)(f2) · g2)`; both inputs are validated first.
pub fn star_compose(
    phi: &ComonoidalAutomorphism,
    psi: &ComonoidalAutomorphism,
) -> Result<ComonoidalAutomorphism, AutoError> {
    for x in [phi, psi] {
        let report = validate_comonoidal_automorphism(x);
        let failed = report.failures().next().map(|f| f.id.clone());
        if let Some(id) = failed {
            return Err(AutoError::ValidationFailure(format!("{}: {id}", x.name())));
        }
    }
    Ok(star_unchecked(phi, psi))
}

pub(crate) fn star_unchecked(phi: &ComonoidalAutomorphism, psi: &ComonoidalAutomorphism) -> ComonoidalAutomorphism {
    let h = phi.hopf();
    let g = psi.map();
    let f2 = h.mul_tensor(&h.map_legs(g, phi.f2(), 2), psi.f2(), 2);
    let f2_inv = h.mul_tensor(psi.f2_inv(), &h.map_legs(g, phi.f2_inv(), 2), 2);
    ComonoidalAutomorphism {
        name: format!("{}*{}", phi.name(), psi.name()),
        hopf: h.clone(),
        map: g * phi.map(),
        map_inv: match (phi.map_inverse(), psi.map_inverse()) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        },
        f2,
        f2_inv,
    }
}

/// `(ad_a ∘ f, (a ⊗ a) · f2 · Δ(a)⁻¹)`, the target of the gauge transformation `a` from `φ`.
pub fn conjugate_by(phi: &ComonoidalAutomorphism, a: &[Scalar]) -> Result<ComonoidalAutomorphism, AutoError> {
    let h = phi.hopf();
    let n = h.dim();
    let a_inv = h.inverse_element(a).ok_or(AutoError::NotInvertible(h.format_element(a)))?;
    let cols: Vec<Vector> = (0..n).map(|i| h.conjugate(a, &a_inv, &phi.map().col(i))).collect();
    let map = Mat::from_columns(n, &cols);
    let aa = crate::exactlin::tensor::kron_vec(a, a);
    let aa_inv = crate::exactlin::tensor::kron_vec(&a_inv, &a_inv);
    let f2 = h.mul_tensor(&h.mul_tensor(&aa, phi.f2(), 2), &h.delta(&a_inv), 2);
    let f2_inv = h.mul_tensor(&h.mul_tensor(&h.delta(a), phi.f2_inv(), 2), &aa_inv, 2);
    ComonoidalAutomorphism::with_f2_inverse(format!("ad({})*{}", h.format_element(a), phi.name()), h.clone(), map, f2, f2_inv)
}

/// `F(X)`: the same space with `a.x = f(a).x`.
pub fn pullback_module(phi: &ComonoidalAutomorphism, x: &HModule) -> HModule {
    x.pullback(phi.map())
}
