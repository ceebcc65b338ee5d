use std::sync::Arc;

use crate::exactlin::{solve_inverse, Mat, Scalar};
use crate::hopfcore::{dual_cop, validate_hopf, HopfAlgebra};
use crate::report::Report;

use super::GDoubleError;

/// A bilinear form `σ: A × B → k`, stored as `matrix[i][j] = σ(a_i, b_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfPairing {
    pub left: Arc<HopfAlgebra>,
    pub right: Arc<HopfAlgebra>,
    pub matrix: Mat,
}

impl HopfPairing {
    pub fn new(left: Arc<HopfAlgebra>, right: Arc<HopfAlgebra>, matrix: Mat) -> Result<Self, GDoubleError> {
        if matrix.shape() != (left.dim(), right.dim()) {
            return Err(GDoubleError::Shape(format!("pairing matrix is {:?}", matrix.shape())));
        }
        Ok(HopfPairing { left, right, matrix })
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_square() && solve_inverse(&self.matrix).is_ok()
    }

    /// `σ(a, x)` for arbitrary elements.
    pub fn eval(&self, a: &[Scalar], x: &[Scalar]) -> Scalar {
        a.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let row = self.matrix.row(i);
                c * &x.iter().zip(row).map(|(y, s)| y * s).sum::<Scalar>()
            })
            .sum()
    }

    /// Dual basis of `B` to the basis of `A`: column `i` is `f_i` with `σ(a_j, f_i) = δ_ij`.
    pub fn dual_basis(&self) -> Option<Mat> {
        solve_inverse(&self.matrix).ok()
    }
}

/// `ev: H × (H*)^cop → k`, the identity matrix in basis/dual-basis coordinates.
///
/// The target `(H*)^cop` is validated as a Hopf algebra and the pairing axioms are
/// re-checked.
pub fn canonical_ev_pairing(h: &Arc<HopfAlgebra>) -> Result<HopfPairing, GDoubleError> {
    let dual = dual_cop(h).map_err(|e| GDoubleError::ValidationFailure(e.to_string()))?;
    let r = validate_hopf(&dual);
    if let Some(id) = r.failures().next().map(|f| f.id.clone()) {
        return Err(GDoubleError::ValidationFailure(format!("dual: {id}")));
    }
    let p = HopfPairing::new(h.clone(), Arc::new(dual), Mat::identity(h.dim()))?;
    let r = validate_pairing(&p);
    if let Some(id) = r.failures().next().map(|f| f.id.clone()) {
        return Err(GDoubleError::ValidationFailure(id));
    }
    Ok(p)
}

/// `σ(ab, x) = σ(a, x₍₂₎)σ(b, x₍₁₎)`, `σ(a, xy) = σ(a₍₁₎, x)σ(a₍₂₎, y)`,
/// `σ(1, x) = ε(x)`, `σ(a, 1) = ε(a)`, and nondegeneracy.
pub fn validate_pairing(p: &HopfPairing) -> Report {
    let (a, b) = (&p.left, &p.right);
    let (n, m) = (a.dim(), b.dim());
    let ops = format!("{} x {}", a.name(), b.name());
    let mut r = Report::new();
    let sigma = |i: usize, j: usize| p.matrix.get(i, j).clone();
    let pair2 = |i: usize, k: usize, t: &[(usize, Scalar)], swap: bool| -> Scalar {
        t.iter()
            .map(|(pq, c)| {
                let (u, v) = (pq / m, pq % m);
                let (first, second) = if swap { (v, u) } else { (u, v) };
                c * &(&sigma(i, first) * &sigma(k, second))
            })
            .sum()
    };

    let bad = (0..n * n * m).find(|&t| {
        let (i, k, x) = (t / (n * m), (t / m) % n, t % m);
        let lhs = p.eval(&a.mul(&a.basis(i), &a.basis(k)), &b.basis(x));
        lhs != pair2(i, k, b.coproduct(x), true)
    });
    r.check("pairing.left_multiplicative", &ops, bad.map(|t| {
        format!("({}, {}, {})", a.label(t / (n * m)), a.label((t / m) % n), b.label(t % m))
    }));

    let bad = (0..n * m * m).find(|&t| {
        let (i, x, y) = (t / (m * m), (t / m) % m, t % m);
        let lhs = p.eval(&a.basis(i), &b.mul(&b.basis(x), &b.basis(y)));
        let rhs: Scalar = a
            .coproduct(i)
            .iter()
            .map(|(pq, c)| c * &(&sigma(pq / n, x) * &sigma(pq % n, y)))
            .sum();
        lhs != rhs
    });
    r.check("pairing.right_multiplicative", &ops, bad.map(|t| {
        format!("({}, {}, {})", a.label(t / (m * m)), b.label((t / m) % m), b.label(t % m))
    }));

    let bad = (0..m).find(|&x| p.eval(a.unit(), &b.basis(x)) != b.counit()[x]);
    r.check("pairing.left_unit", &ops, bad.map(|x| format!("({})", b.label(x))));
    let bad = (0..n).find(|&i| p.eval(&a.basis(i), b.unit()) != a.counit()[i]);
    r.check("pairing.right_unit", &ops, bad.map(|i| format!("({})", a.label(i))));
    r.check(
        "pairing.nondegenerate",
        &ops,
        (!p.is_nondegenerate()).then(|| format!("rank {} of {}x{}", p.matrix.rank(), n, m)),
    );
    r
}
