use crate::exactlin::{leg_permutation, Mat, Scalar};
use crate::group::FiniteGroup;

use super::{HopfAlgebra, HopfError};

/// The group algebra `k[G]`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(group: &FiniteGroup) -> HopfAlgebra {
    let n = group.order();
    let mut mult = Mat::zeros(n, n * n);
    let mut comult = Mat::zeros(n * n, n);
    let mut antipode = Mat::zeros(n, n);
    for g in 0..n {
        for h in 0..n {
            mult.set(group.mul(g, h), g * n + h, Scalar::one());
        }
        comult.set(g * n + g, g, Scalar::one());
        antipode.set(group.inv(g), g, Scalar::one());
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[group.identity()] = Scalar::one();
    let counit = vec![Scalar::one(); n];
    let name = format!("k[{}]", group.labels().join(","));
    HopfAlgebra::with_antipode_inverse(
        name,
        group.labels().to_vec(),
        mult,
        unit,
        comult,
        counit,
        Some(antipode.clone()),
        Some(antipode),
    )
    .expect("group algebra shapes are consistent")
}

/// Group algebra from a raw multiplication table; the table is validated first.
pub fn group_algebra_from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<HopfAlgebra, HopfError> {
    Ok(group_algebra(&FiniteGroup::from_table(labels, table)?))
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf() -> HopfAlgebra {
    group_algebra(&FiniteGroup::from_table(vec!["1".into()], vec![vec![0]]).unwrap()).renamed("k")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`.
///
/// The basis element `g^a x^b` has index `a + 2b`.
pub fn sweedler_h4() -> HopfAlgebra {
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = Mat::zeros(4, 16);
    for (a, b, c, d) in bit_quadruples() {
        if b + d >= 2 {
            continue;
        }
        let sign = if b * c % 2 == 1 { -1 } else { 1 };
        mult.set(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), Scalar::int(sign));
    }
    let one = Scalar::one;
    let mut comult = Mat::zeros(16, 4);
    comult.set(0, 0, one());
    comult.set(idx(1, 0) * 4 + idx(1, 0), idx(1, 0), one());
    // Δ(x) = x ⊗ 1 + g ⊗ x
    comult.set(idx(0, 1) * 4 + idx(0, 0), idx(0, 1), one());
    comult.set(idx(1, 0) * 4 + idx(0, 1), idx(0, 1), one());
    // Δ(gx) = gx ⊗ g + 1 ⊗ gx
    comult.set(idx(1, 1) * 4 + idx(1, 0), idx(1, 1), one());
    comult.set(idx(0, 0) * 4 + idx(1, 1), idx(1, 1), one());
    let counit = vec![one(), one(), Scalar::zero(), Scalar::zero()];
    let unit = vec![one(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
    let antipode = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    HopfAlgebra::new("H4", labels, mult, unit, comult, counit, Some(antipode)).expect("H4 shapes are consistent")
}

fn bit_quadruples() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|k| (k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1))
}

/// `(H*)^cop` on the dual basis `e^i`.
///
/// Its multiplication is the transpose of `Δ`, its comultiplication the flipped
/// transpose of `m`, and its antipode is `(S⁻¹)*`.
pub fn dual_cop(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let n = h.dim();
    let s = h.antipode().ok_or(HopfError::MissingAntipode)?;
    let s_inv = h.antipode_inverse().ok_or(HopfError::MissingAntipodeInverse)?;
    let flip = leg_permutation(&[n, n], &[1, 0]);
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    HopfAlgebra::with_antipode_inverse(
        format!("dual_cop({})", h.name()),
        labels,
        h.comult().transpose(),
        h.counit().clone(),
        &flip * &h.mult().transpose(),
        h.unit().clone(),
        Some(s_inv.transpose()),
        Some(s.transpose()),
    )
}

/// `H^{op,cop}`: both structure maps composed with the flip; same antipode.
pub fn opposite_coopposite(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let flip = leg_permutation(&[n, n], &[1, 0]);
    HopfAlgebra::with_antipode_inverse(
        format!("{}^op,cop", h.name()),
        h.labels().to_vec(),
        h.mult() * &flip,
        h.unit().clone(),
        &flip * h.comult(),
        h.counit().clone(),
        h.antipode().cloned(),
        h.antipode_inverse().cloned(),
    )
    .expect("shapes are inherited")
}
