//! Coordinate vectors in tensor products of based spaces.
//!
//! Flattening is row-major in the legs: for `dims = [d0, d1, …]` the basis tensor
//! `e_{i0} ⊗ e_{i1} ⊗ …` sits at `((i0 * d1) + i1) * d2 + …`, matching [`super::kron`].

use super::matrix::Mat;
use super::scalar::Scalar;

/// `(index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn flatten(dims: &[usize], idx: &[usize]) -> usize {
    dims.iter().zip(idx).fold(0, |acc, (&d, &i)| acc * d + i)
}

pub fn unflatten_into(dims: &[usize], mut flat: usize, out: &mut [usize]) {
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
}

pub fn unflatten(dims: &[usize], flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    unflatten_into(dims, flat, &mut out);
    out
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vec(s: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| s * x).collect()
}

/// Applies one linear map per leg (`None` = identity on that leg).
///
/// Returns the image; the output leg dimensions are the row counts of the maps.
pub fn apply_legwise(dims: &[usize], maps: &[Option<&Mat>], v: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(dims.len(), maps.len());
    assert_eq!(v.len(), dims.iter().product::<usize>(), "vector does not match leg dims");
    let out_dims: Vec<usize> =
        maps.iter().zip(dims).map(|(m, &d)| m.map_or(d, |m| m.rows())).collect();
    let cols: Vec<Option<Vec<SparseVec>>> = maps.iter().map(|m| m.map(Mat::sparse_columns)).collect();
    let mut out = vec![Scalar::zero(); out_dims.iter().product()];
    let mut idx = vec![0usize; dims.len()];
    for (flat, coeff) in sparse(v) {
        unflatten_into(dims, flat, &mut idx);
        // expand the product of per-leg images
        let mut partial: Vec<(usize, Scalar)> = vec![(0, coeff)];
        for (leg, &i) in idx.iter().enumerate() {
            let d_out = out_dims[leg];
            let mut next = Vec::new();
            for (acc_idx, acc_c) in &partial {
                match &cols[leg] {
                    None => next.push((acc_idx * d_out + i, acc_c.clone())),
                    Some(c) => {
                        for (r, x) in &c[i] {
                            next.push((acc_idx * d_out + r, acc_c * x));
                        }
                    }
                }
            }
            partial = next;
        }
        for (o, c) in partial {
            out[o] += &c;
        }
    }
    out
}

/// Reorders legs: output leg `k` is input leg `perm[k]`.
pub fn permute_legs(dims: &[usize], perm: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out = vec![Scalar::zero(); v.len()];
    let mut idx = vec![0usize; dims.len()];
    for (flat, c) in sparse(v) {
        unflatten_into(dims, flat, &mut idx);
        let o: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        out[flatten(&out_dims, &o)] = c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{kron, leg_permutation};

    #[test]
    fn legwise_matches_kron() {
        let a = Mat::from_ints(&[&[1, 2], &[0, -1], &[3, 1]]);
        let b = Mat::from_ints(&[&[2, 0], &[1, 1]]);
        let v: Vec<Scalar> = (0..4).map(|i| Scalar::int(i as i64 - 1)).collect();
        let via_kron = kron(&a, &b).apply(&v);
        assert_eq!(apply_legwise(&[2, 2], &[Some(&a), Some(&b)], &v), via_kron);
        let via_kron_id = kron(&a, &Mat::identity(2)).apply(&v);
        assert_eq!(apply_legwise(&[2, 2], &[Some(&a), None], &v), via_kron_id);
    }

    #[test]
    fn permute_matches_matrix() {
        let v: Vec<Scalar> = (0..24).map(|i| Scalar::int(i as i64)).collect();
        let dims = [2, 3, 4];
        let perm = [2, 0, 1];
        assert_eq!(permute_legs(&dims, &perm, &v), leg_permutation(&dims, &perm).apply(&v));
    }
}
