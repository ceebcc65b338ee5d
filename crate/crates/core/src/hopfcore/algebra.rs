use crate::exactlin::tensor::{apply_legwise, basis_vector, sparse, unflatten_into};
use crate::exactlin::{solve_inverse, Mat, Scalar, SparseVec, Vector};

use super::HopfError;

/// A finite-dimensional Hopf algebra given by structure constants in a fixed basis.
///
/// `mult` is `n × n²` (column `i*n+j` is `e_i e_j`), `comult` is `n² × n`
/// (column `i` is `Δ(e_i)`), `counit` is the row of values `ε(e_i)`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    name: String,
    labels: Vec<String>,
    mult: Mat,
    unit: Vector,
    comult: Mat,
    counit: Vector,
    antipode: Option<Mat>,
    antipode_inverse: Option<Mat>,
    prod: Vec<SparseVec>,
    coprod: Vec<SparseVec>,
    coprod2: Vec<Vec<(usize, usize, usize, Scalar)>>,
}

impl PartialEq for HopfAlgebra {
    /// Structural equality of the defining data; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.antipode_inverse == other.antipode_inverse
    }
}

impl Eq for HopfAlgebra {}

impl HopfAlgebra {
    /// Assembles a Hopf algebra, checking only shapes.
    ///
    /// When an antipode is given its inverse is computed here, if it exists.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        mult: Mat,
        unit: Vector,
        comult: Mat,
        counit: Vector,
        antipode: Option<Mat>,
    ) -> Result<Self, HopfError> {
        let antipode_inverse = antipode.as_ref().and_then(|s| solve_inverse(s).ok());
        Self::with_antipode_inverse(name, labels, mult, unit, comult, counit, antipode, antipode_inverse)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_antipode_inverse(
        name: impl Into<String>,
        labels: Vec<String>,
        mult: Mat,
        unit: Vector,
        comult: Mat,
        counit: Vector,
        antipode: Option<Mat>,
        antipode_inverse: Option<Mat>,
    ) -> Result<Self, HopfError> {
        let n = labels.len();
        let shape = |what: &str, got: (usize, usize), want: (usize, usize)| {
            if got == want {
                Ok(())
            } else {
                Err(HopfError::ShapeMismatch(format!("{what} is {got:?}, expected {want:?}")))
            }
        };
        shape("mult", mult.shape(), (n, n * n))?;
        shape("comult", comult.shape(), (n * n, n))?;
        shape("unit", (unit.len(), 1), (n, 1))?;
        shape("counit", (counit.len(), 1), (n, 1))?;
        if let Some(s) = &antipode {
            shape("antipode", s.shape(), (n, n))?;
        }
        if let Some(s) = &antipode_inverse {
            shape("antipode_inverse", s.shape(), (n, n))?;
        }
        let prod = mult.sparse_columns();
        let coprod = comult.sparse_columns();
        let mut coprod2 = Vec::with_capacity(n);
        for col in &coprod {
            let mut terms = Vec::new();
            for (pq, c) in col {
                let (p, q) = (pq / n, pq % n);
                for (rs, d) in &coprod[q] {
                    terms.push((p, rs / n, rs % n, c * d));
                }
            }
            coprod2.push(terms);
        }
        Ok(HopfAlgebra {
            name: name.into(),
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inverse,
            prod,
            coprod,
            coprod2,
        })
    }

    /// Equality of structure constants, ignoring names and basis labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.antipode_inverse == other.antipode_inverse
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn comult(&self) -> &Mat {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Mat> {
        self.antipode.as_ref()
    }

    pub fn antipode_inverse(&self) -> Option<&Mat> {
        self.antipode_inverse.as_ref()
    }

    /// `e_i e_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.prod[i * self.dim() + j]
    }

    /// `Δ(e_i)` as sparse entries over the flat `n²` basis.
    pub fn coproduct(&self, i: usize) -> &SparseVec {
        &self.coprod[i]
    }

    /// `(Δ ⊗ id)Δ(e_i)` as `(p, q, r, c)` with `c · e_p ⊗ e_q ⊗ e_r`.
    pub fn coproduct2(&self, i: usize) -> &[(usize, usize, usize, Scalar)] {
        &self.coprod2[i]
    }

    pub fn basis(&self, i: usize) -> Vector {
        basis_vector(self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        vec![Scalar::zero(); self.dim()]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        let sb = sparse(b);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in &sb {
                let xy = x * y;
                for (k, c) in self.product(i, *j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    /// Product of any number of factors, left to right.
    pub fn mul_all(&self, factors: &[&[Scalar]]) -> Vector {
        factors.iter().fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    pub fn delta(&self, a: &[Scalar]) -> Vector {
        self.comult.apply(a)
    }

    pub fn eps(&self, a: &[Scalar]) -> Scalar {
        a.iter().zip(&self.counit).filter(|(x, _)| !x.is_zero()).map(|(x, e)| x * e).sum()
    }

    pub fn left_mult(&self, a: &[Scalar]) -> Mat {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        Mat::from_columns(self.dim(), &cols)
    }

    /// Two-sided inverse of `a`, if it exists.
    pub fn inverse_element(&self, a: &[Scalar]) -> Option<Vector> {
        let x = self.left_mult(a).solve(&self.unit)?;
        (self.mul(&x, a) == self.unit).then_some(x)
    }

    /// `a x a⁻¹` given `a` and its inverse.
    pub fn conjugate(&self, a: &[Scalar], a_inv: &[Scalar], x: &[Scalar]) -> Vector {
        self.mul(&self.mul(a, x), a_inv)
    }

    /// `1 ⊗ … ⊗ 1` with `legs` factors.
    pub fn unit_tensor(&self, legs: usize) -> Vector {
        (0..legs).fold(vec![Scalar::one()], |acc, _| crate::exactlin::tensor::kron_vec(&acc, &self.unit))
    }

    /// Componentwise product in `H^{⊗legs}`.
    pub fn mul_tensor(&self, u: &[Scalar], v: &[Scalar], legs: usize) -> Vector {
        let n = self.dim();
        let total = n.pow(legs as u32);
        assert_eq!(u.len(), total, "tensor length mismatch");
        assert_eq!(v.len(), total, "tensor length mismatch");
        let dims = vec![n; legs];
        let mut out = vec![Scalar::zero(); total];
        let su = sparse(u);
        let sv = sparse(v);
        let mut iu = vec![0; legs];
        let mut iv = vec![0; legs];
        for (fu, cu) in &su {
            unflatten_into(&dims, *fu, &mut iu);
            for (fv, cv) in &sv {
                unflatten_into(&dims, *fv, &mut iv);
                let mut partial: Vec<(usize, Scalar)> = vec![(0, cu * cv)];
                for leg in 0..legs {
                    let p = self.product(iu[leg], iv[leg]);
                    let mut next = Vec::with_capacity(partial.len() * p.len());
                    for (idx, c) in &partial {
                        for (k, d) in p {
                            next.push((idx * n + k, c * d));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out[idx] += &c;
                }
            }
        }
        out
    }

    /// Inverse in the algebra `H^{⊗legs}`, if it exists.
    pub fn inverse_tensor(&self, u: &[Scalar], legs: usize) -> Option<Vector> {
        let total = self.dim().pow(legs as u32);
        let cols: Vec<Vector> =
            (0..total).map(|j| self.mul_tensor(u, &basis_vector(total, j), legs)).collect();
        let one = self.unit_tensor(legs);
        let x = Mat::from_columns(total, &cols).solve(&one)?;
        (self.mul_tensor(&x, u, legs) == one).then_some(x)
    }

    /// Applies `map` to every leg of a tensor in `H^{⊗legs}`.
    pub fn map_legs(&self, map: &Mat, u: &[Scalar], legs: usize) -> Vector {
        let dims = vec![self.dim(); legs];
        let maps = vec![Some(map); legs];
        apply_legwise(&dims, &maps, u)
    }

    /// Applies `map` to leg `leg` only.
    pub fn map_leg(&self, map: &Mat, u: &[Scalar], legs: usize, leg: usize) -> Vector {
        let dims = vec![self.dim(); legs];
        let mut maps = vec![None; legs];
        maps[leg] = Some(map);
        apply_legwise(&dims, &maps, u)
    }

    /// Applies `Δ` to leg `leg`, producing a tensor with one more leg.
    pub fn delta_leg(&self, u: &[Scalar], legs: usize, leg: usize) -> Vector {
        self.map_leg(&self.comult, u, legs, leg)
    }

    /// Applies `ε` to leg `leg`, producing a tensor with one fewer leg.
    pub fn eps_leg(&self, u: &[Scalar], legs: usize, leg: usize) -> Vector {
        let counit = Mat::row_vector(&self.counit);
        self.map_leg(&counit, u, legs, leg)
    }

    /// Splits a tensor in `H ⊗ H` into sparse `(first, second, coefficient)` terms.
    pub fn terms2(&self, u: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        sparse(u).into_iter().map(|(f, c)| (f / n, f % n, c)).collect()
    }

    /// Readable rendering of an element as a linear combination of basis labels.
    pub fn format_element(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = sparse(a)
            .into_iter()
            .map(|(i, c)| if c.is_one() { self.labels[i].clone() } else { format!("{c}*{}", self.labels[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
