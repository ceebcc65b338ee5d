use crate::exactlin::tensor::{basis_vector, kron_vec};
use crate::exactlin::{Mat, Vector};
use crate::report::Report;

use super::HopfAlgebra;

fn tuple(h: &HopfAlgebra, idx: &[usize]) -> String {
    let parts: Vec<&str> = idx.iter().map(|&i| h.label(i)).collect();
    format!("({})", parts.join(", "))
}

fn first<I: Iterator<Item = Vec<usize>>>(h: &HopfAlgebra, mut tuples: I, fails: impl Fn(&[usize]) -> bool) -> Option<String> {
    tuples.find(|t| fails(t)).map(|t| tuple(h, &t))
}

fn singles(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).map(|i| vec![i])
}

fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n * n).map(move |k| vec![k / n, k % n])
}

fn triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n * n * n).map(move |k| vec![k / (n * n), (k / n) % n, k % n])
}

/// `m ∘ (L ⊗ R) ∘ Δ` evaluated on `e_i`.
fn convolve(h: &HopfAlgebra, left: Option<&Mat>, right: Option<&Mat>, i: usize) -> Vector {
    let mut out = h.zero();
    for (pq, c) in h.coproduct(i) {
        let n = h.dim();
        let a = left.map_or_else(|| h.basis(pq / n), |m| m.col(pq / n));
        let b = right.map_or_else(|| h.basis(pq % n), |m| m.col(pq % n));
        for (o, x) in out.iter_mut().zip(h.mul(&a, &b)) {
            *o += &(c * &x);
        }
    }
    out
}

/// Checks every Hopf algebra axiom exhaustively over basis tuples.
///
/// Antipode checks are included when an antipode is present, and the inverse
/// identities when an antipode inverse is present.
pub fn validate_hopf(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let name = h.name();
    let e = |i: usize| basis_vector(n, i);
    let mut r = Report::new();

    r.check(
        "hopf.associativity",
        name,
        first(h, triples(n), |t| {
            h.mul(&h.mul(&e(t[0]), &e(t[1])), &e(t[2])) != h.mul(&e(t[0]), &h.mul(&e(t[1]), &e(t[2])))
        }),
    );
    r.check(
        "hopf.unitality",
        name,
        first(h, singles(n), |t| h.mul(h.unit(), &e(t[0])) != e(t[0]) || h.mul(&e(t[0]), h.unit()) != e(t[0])),
    );
    r.check(
        "hopf.coassociativity",
        name,
        first(h, singles(n), |t| {
            let d = h.delta(&e(t[0]));
            h.delta_leg(&d, 2, 0) != h.delta_leg(&d, 2, 1)
        }),
    );
    r.check(
        "hopf.counitality",
        name,
        first(h, singles(n), |t| {
            let d = h.delta(&e(t[0]));
            h.eps_leg(&d, 2, 0) != e(t[0]) || h.eps_leg(&d, 2, 1) != e(t[0])
        }),
    );
    r.check(
        "hopf.comult_multiplicative",
        name,
        first(h, pairs(n), |t| {
            h.delta(&h.mul(&e(t[0]), &e(t[1]))) != h.mul_tensor(&h.delta(&e(t[0])), &h.delta(&e(t[1])), 2)
        }),
    );
    r.check(
        "hopf.comult_unital",
        name,
        (h.delta(h.unit()) != kron_vec(h.unit(), h.unit())).then(|| "(1)".to_string()),
    );
    r.check(
        "hopf.counit_multiplicative",
        name,
        first(h, pairs(n), |t| h.eps(&h.mul(&e(t[0]), &e(t[1]))) != h.counit()[t[0]].clone() * &h.counit()[t[1]]),
    );
    r.check("hopf.counit_unital", name, (!h.eps(h.unit()).is_one()).then(|| "(1)".to_string()));

    if let Some(s) = h.antipode() {
        let target = |i: usize| -> Vector { h.unit().iter().map(|u| u * &h.counit()[i]).collect() };
        r.check(
            "hopf.antipode_left",
            name,
            first(h, singles(n), |t| convolve(h, Some(s), None, t[0]) != target(t[0])),
        );
        r.check(
            "hopf.antipode_right",
            name,
            first(h, singles(n), |t| convolve(h, None, Some(s), t[0]) != target(t[0])),
        );
        if let Some(si) = h.antipode_inverse() {
            let ok = (s * si).is_identity() && (si * s).is_identity();
            let witness = (!ok).then(|| {
                let prod = s * si;
                let j = (0..n).find(|&j| prod.col(j) != e(j)).unwrap_or(0);
                tuple(h, &[j])
            });
            r.check("hopf.antipode_inverse", name, witness);
        }
    }
    r
}

/// Whether `S ∘ S = id` (true for commutative or cocommutative Hopf algebras).
pub fn antipode_is_involutive(h: &HopfAlgebra) -> bool {
    h.antipode().is_some_and(|s| (s * s).is_identity())
}

/// `ε ∘ S = ε`, entrywise.
pub fn counit_antipode_invariant(h: &HopfAlgebra) -> bool {
    h.antipode().is_some_and(|s| {
        let row = Mat::row_vector(h.counit());
        (&row * s).row(0) == h.counit().as_slice()
    })
}
