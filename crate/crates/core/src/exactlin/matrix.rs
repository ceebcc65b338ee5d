use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;
use super::tensor::SparseVec;
use super::NotInvertible;

/// Dense matrix of exact scalars, row-major.
///
/// Every linear map between based spaces in this crate is a `Mat` acting on column
/// vectors: column `j` is the image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from rows; `None` if the rows are ragged.
    pub fn try_from_rows(rows: Vec<Vec<Scalar>>, cols_if_empty: usize) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(cols_if_empty, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        Mat::try_from_rows(rows, 0).expect("ragged rows")
    }

    /// Integer convenience constructor, mostly for tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Mat::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.data[i * columns.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Mat { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn row_vector(v: &[Scalar]) -> Self {
        Mat { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Nonzero entries of each column.
    pub fn sparse_columns(&self) -> Vec<SparseVec> {
        let mut out = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, x) in self.row(i).iter().enumerate() {
                if !x.is_zero() {
                    out[j].push((i, x.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// `self += s * other`, skipping zero entries.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Mat) {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add_scaled");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// First position (scanning column by column) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in comparison");
        for j in 0..self.cols {
            for i in 0..self.rows {
                if self.get(i, j) != other.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn inverse(&self) -> Result<Mat, NotInvertible> {
        solve_inverse(self)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.sub_row_multiple(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let x = &self.data[r * self.cols + j];
            if !x.is_zero() {
                self.data[r * self.cols + j] = x * s;
            }
        }
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let delta = factor * s;
                self.data[target * self.cols + j] -= &delta;
            }
        }
    }
}

/// Exact inverse by Gauss-Jordan elimination over the scalar field.
pub fn solve_inverse(a: &Mat) -> Result<Mat, NotInvertible> {
    if !a.is_square() {
        return Err(NotInvertible);
    }
    let n = a.rows;
    let mut aug = Mat::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, Scalar::one());
    }
    let (r, pivots) = aug.rref();
    if pivots.len() != n || pivots.last().is_some_and(|&p| p >= n) {
        return Err(NotInvertible);
    }
    Ok(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

/// Kronecker product: `(A ⊗ B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l]`.
///
/// This fixes the crate-wide flattening `e_i ⊗ e_k ↦ i * dim(second) + k`.
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    let mut out = Mat::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * rb + k, j * cb + l, x * y);
                    }
                }
            }
        }
    }
    out
}

/// Permutation matrix reordering tensor legs.
///
/// The input space is `dims[0] ⊗ … ⊗ dims[m-1]`; output leg `k` is input leg `perm[k]`.
/// For `dims = [p, q]` and `perm = [1, 0]` this is the flip `x ⊗ y ↦ y ⊗ x`.
pub fn leg_permutation(dims: &[usize], perm: &[usize]) -> Mat {
    assert_eq!(dims.len(), perm.len(), "permutation length mismatch");
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(p < perm.len() && !seen[p], "not a permutation: {perm:?}");
        seen[p] = true;
    }
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Mat::zeros(total, total);
    let mut idx = vec![0usize; dims.len()];
    for flat in 0..total {
        super::tensor::unflatten_into(dims, flat, &mut idx);
        let out_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(super::tensor::flatten(&out_dims, &out_idx), flat, Scalar::one());
    }
    m
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let rhs_rows: Vec<Vec<(usize, &Scalar)>> = (0..rhs.rows)
            .map(|k| rhs.row(k).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &rhs_rows[k] {
                    out.data[i * rhs.cols + j] += &(a * b);
                }
            }
        }
        out
    }
}

impl Mul<Mat> for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl Add<&Mat> for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub<&Mat> for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identity_and_scalars() {
        assert_eq!(kron(&Mat::identity(2), &Mat::identity(3)), Mat::identity(6));
        assert_eq!(kron(&Mat::from_ints(&[&[2]]), &Mat::from_ints(&[&[3]])), Mat::from_ints(&[&[6]]));
    }

    #[test]
    fn flip_matrix_entries() {
        let t = leg_permutation(&[2, 2], &[1, 0]);
        let expected = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(t, expected);
        assert_eq!(leg_permutation(&[4], &[0]), Mat::identity(4));
    }

    #[test]
    fn flip_is_involution() {
        let t1 = leg_permutation(&[3, 5], &[1, 0]);
        let t2 = leg_permutation(&[5, 3], &[1, 0]);
        assert!((&t2 * &t1).is_identity());
        assert!((&t1 * &t2).is_identity());
    }

    #[test]
    fn small_inverses() {
        assert_eq!(solve_inverse(&Mat::identity(3)).unwrap(), Mat::identity(3));
        let swap = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(solve_inverse(&swap).unwrap(), swap);
        assert!(solve_inverse(&Mat::from_ints(&[&[1, 2], &[2, 4]])).is_err());
        assert!(solve_inverse(&Mat::zeros(2, 3)).is_err());
        assert_eq!(solve_inverse(&Mat::zeros(0, 0)).unwrap(), Mat::zeros(0, 0));
    }

    #[test]
    fn nullspace_and_solve() {
        let a = Mat::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.apply(v).iter().all(Scalar::is_zero));
        }
        let x = a.solve(&[Scalar::int(2), Scalar::int(4)]).unwrap();
        assert_eq!(a.apply(&x), vec![Scalar::int(2), Scalar::int(4)]);
        assert!(a.solve(&[Scalar::int(1), Scalar::int(1)]).is_none());
    }
}
