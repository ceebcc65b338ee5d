use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::autoact::ActionData;
use crate::eqcenter::{crossed_action, g_braiding, yd_tensor, CenterObject, TUPLE_DIM_CAP};
use crate::exactlin::tensor::{basis_vector, kron_vec, sparse};
use crate::exactlin::{kron, leg_permutation, Mat, Scalar, Vector};
use crate::report::{mat_witness, DiagramId, DiagramReport, Report};

use super::{double_module_to_yd, yd_to_double_module, DoubleAlgebra, DoubleModule, GDoubleError};

/// Largest `D_h ⊗ D_g` in which the inverse of `R̄` is also found by a linear solve.
pub const BRUTE_FORCE_CAP: usize = 256;

/// Which comultiplication and crossing the family of doubles carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoproductMode {
    /// Components `D_{f_g}`, `Δ̄_{g,h}(a ⊗ x) = (a₍₁₎ ⊗ f*_h(x₍₁₎)) ⊗ (a₍₂₎ ⊗ x₍₂₎)`,
    /// crossing `a ⊗ x ↦ f_g(a) ⊗ f*_{g⁻¹}(x)` with `φ_h φ_g = φ_{gh}`.
    Modified,
    /// Components `D_{ψ_g}` for the homomorphism `ψ_g = f_{g⁻¹}`,
    /// `Δ_{g,h}(a ⊗ x) = (ψ_h(a₍₁₎) ⊗ x₍₁₎) ⊗ (a₍₂₎ ⊗ x₍₂₎)`,
    /// crossing `a ⊗ x ↦ ψ_g(a) ⊗ ψ*_{g⁻¹}(x)` with `φ_g φ_h = φ_{gh}`.
    Homomorphic,
}

/// A family of doubles indexed by `G` with comultiplications, crossings and the
/// elements `R̄_{g,h}`.
#[derive(Clone, Debug)]
pub struct GCoalgebraData {
    action: ActionData,
    mode: CoproductMode,
    doubles: Vec<Arc<DoubleAlgebra>>,
    comult: Vec<Mat>,
    crossings: Vec<Mat>,
    r_matrix: Vec<Vector>,
}

/// Builds the family for an action with trivial comonoidal structures and gauges.
pub fn build_g_coalgebra(action: &ActionData, mode: CoproductMode) -> Result<GCoalgebraData, GDoubleError> {
    if !action.is_strict() {
        return Err(GDoubleError::NonStrictAction(action.name().to_string()));
    }
    let grp = action.group();
    let m = grp.order();
    let h = action.hopf();
    let n = h.dim();
    let index = |g: usize| match mode {
        CoproductMode::Modified => g,
        CoproductMode::Homomorphic => grp.inv(g),
    };
    let doubles = (0..m)
        .map(|g| DoubleAlgebra::from_twist(action.auto(index(g)).clone()).map(Arc::new))
        .collect::<Result<Vec<_>, _>>()?;
    let dual = doubles[0].dual().clone();
    let f = |g: usize| action.auto(index(g)).map().clone();
    let n2 = n * n;

    let mut comult = Vec::with_capacity(m * m);
    for _ in 0..m {
        for k in 0..m {
            let fk = f(k);
            let fk_star = fk.transpose();
            let mut mat = Mat::zeros(n2 * n2, n2);
            for a in 0..n {
                for &(pq, ref c) in h.coproduct(a).iter() {
                    let (a1, a2) = (pq / n, pq % n);
                    let left_a = match mode {
                        CoproductMode::Modified => basis_vector(n, a1),
                        CoproductMode::Homomorphic => fk.col(a1),
                    };
                    for x in 0..n {
                        for &(uv, ref e) in dual.coproduct(x).iter() {
                            let (x1, x2) = (uv / n, uv % n);
                            let left_x = match mode {
                                CoproductMode::Modified => fk_star.col(x1),
                                CoproductMode::Homomorphic => basis_vector(n, x1),
                            };
                            let left = kron_vec(&left_a, &left_x);
                            let right = basis_vector(n2, a2 * n + x2);
                            for (r, v) in sparse(&kron_vec(&left, &right)) {
                                *mat.entry_mut(r, a * n + x) += &(&(c * e) * &v);
                            }
                        }
                    }
                }
            }
            comult.push(mat);
        }
    }

    let crossings = (0..m)
        .flat_map(|g| (0..m).map(move |_| g))
        .map(|g| kron(&f(g), &f(grp.inv(g)).transpose()))
        .collect();

    let s = h.antipode().ok_or(GDoubleError::MissingAntipode)?;
    let r_matrix = (0..m * m)
        .map(|_| {
            let mut r = vec![Scalar::zero(); n2 * n2];
            for i in 0..n {
                let left = kron_vec(&s.col(i), h.counit());
                let right = kron_vec(h.unit(), &basis_vector(n, i));
                for (o, t) in r.iter_mut().zip(kron_vec(&left, &right)) {
                    *o += &t;
                }
            }
            r
        })
        .collect();
    Ok(GCoalgebraData { action: action.clone(), mode, doubles, comult, crossings, r_matrix })
}

impl GCoalgebraData {
    pub fn action(&self) -> &ActionData {
        &self.action
    }

    pub fn mode(&self) -> CoproductMode {
        self.mode
    }

    pub fn double(&self, g: usize) -> &Arc<DoubleAlgebra> {
        &self.doubles[g]
    }

    /// `Δ_{g,h}: D_{gh} → D_g ⊗ D_h`.
    pub fn comult(&self, g: usize, h: usize) -> &Mat {
        &self.comult[g * self.action.group().order() + h]
    }

    /// The crossing at `g` restricted to the component `D_h`.
    pub fn crossing(&self, g: usize, h: usize) -> &Mat {
        &self.crossings[g * self.action.group().order() + h]
    }

    /// The component the crossing at `g` sends `D_h` to.
    pub fn crossing_target(&self, g: usize, h: usize) -> usize {
        let grp = self.action.group();
        match self.mode {
            CoproductMode::Modified => grp.conjugate(grp.inv(g), h),
            CoproductMode::Homomorphic => grp.conjugate(g, h),
        }
    }

    /// `R̄_{g,h} = Σᵢ (S(e_i) ⊗ ε) ⊗ (1 ⊗ e^i)`, an element of `D_h ⊗ D_g`.
    pub fn r_bar(&self, g: usize, h: usize) -> &Vector {
        &self.r_matrix[g * self.action.group().order() + h]
    }

    /// `Σᵢ (e_i ⊗ ε) ⊗ (1 ⊗ e^i)`.
    pub fn r_bar_inverse_candidate(&self) -> Vector {
        let h = self.action.hopf();
        let n = h.dim();
        let mut out = vec![Scalar::zero(); n * n * n * n];
        for i in 0..n {
            let left = kron_vec(&basis_vector(n, i), h.counit());
            let right = kron_vec(h.unit(), &basis_vector(n, i));
            for (o, t) in out.iter_mut().zip(kron_vec(&left, &right)) {
                *o += &t;
            }
        }
        out
    }

    /// Solves `R̄_{g,h} · U = 1` in `D_h ⊗ D_g`; `None` if there is no solution.
    pub fn solve_r_bar_inverse(&self, g: usize, h: usize) -> Option<Vector> {
        let (a, b) = (&self.doubles[h], &self.doubles[g]);
        let dim = a.dim() * b.dim();
        let r = self.r_bar(g, h);
        let cols: Vec<Vector> = (0..dim).map(|t| tensor_mul(a, b, r, &basis_vector(dim, t))).collect();
        let lhs = Mat::from_columns(dim, &cols);
        lhs.solve(&kron_vec(a.unit(), b.unit()))
    }
}

/// Product in `A ⊗ B`.
pub fn tensor_mul(a: &DoubleAlgebra, b: &DoubleAlgebra, u: &[Scalar], v: &[Scalar]) -> Vector {
    let mb = b.dim();
    let mut out = vec![Scalar::zero(); a.dim() * mb];
    for (s, cs) in sparse(u) {
        for (t, ct) in sparse(v) {
            let x = a.mul(&a.basis(s / mb), &a.basis(t / mb));
            let y = b.mul(&b.basis(s % mb), &b.basis(t % mb));
            let c = &cs * &ct;
            for (k, e) in sparse(&kron_vec(&x, &y)) {
                out[k] += &(&c * &e);
            }
        }
    }
    out
}

fn accumulate(acc: &mut BTreeMap<usize, Scalar>, i: usize, c: Scalar) {
    *acc.entry(i).or_insert_with(Scalar::zero) += &c;
}

fn prune(acc: BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn is_algebra_map(source: &DoubleAlgebra, apply: impl Fn(&[Scalar]) -> Vector + Sync, mul: impl Fn(&[Scalar], &[Scalar]) -> Vector + Sync, unit: &[Scalar]) -> Option<String> {
    let m = source.dim();
    if apply(source.unit()) != unit {
        return Some("unit not preserved".into());
    }
    let images: Vec<Vector> = (0..m).map(|a| apply(&source.basis(a))).collect();
    (0..m * m)
        .into_par_iter()
        .find_first(|&t| {
            let (a, b) = (t / m, t % m);
            apply(&source.mul(&source.basis(a), &source.basis(b))) != mul(&images[a], &images[b])
        })
        .map(|t| format!("(b{}, b{})", t / m, t % m))
}

/// Algebra-map property and coassociativity of the comultiplications, algebra
/// isomorphism property and composition law of the crossings, their compatibility
/// with the comultiplications, and invertibility of `R̄`.
pub fn validate_g_coalgebra(data: &GCoalgebraData) -> Report {
    let grp = data.action.group();
    let m = grp.order();
    let name = format!("{} ({:?})", data.action.name(), data.mode).to_lowercase();
    let mut r = Report::new();

    for g in 0..m {
        for h in 0..m {
            let ops = format!("{name} ({},{})", grp.label(g), grp.label(h));
            let (a, b) = (&data.doubles[g], &data.doubles[h]);
            let d = data.comult(g, h);
            let witness = is_algebra_map(
                &data.doubles[grp.mul(g, h)],
                |u| d.apply(u),
                |u, v| tensor_mul(a, b, u, v),
                &kron_vec(a.unit(), b.unit()),
            );
            r.check("gcoalgebra.comult_algebra_map", &ops, witness);
        }
    }
    for g in 0..m {
        for h in 0..m {
            for k in 0..m {
                let ops = format!("{name} ({},{},{})", grp.label(g), grp.label(h), grp.label(k));
                let dk = data.doubles[k].dim();
                let dhk = data.doubles[grp.mul(h, k)].dim();
                let outer = data.doubles[grp.mul(grp.mul(g, h), k)].dim();
                let dh = data.doubles[h].dim();
                let witness = (0..outer).find_map(|a| {
                    let mut lhs = BTreeMap::new();
                    for (t, c) in sparse(&data.comult(grp.mul(g, h), k).col(a)) {
                        for (u, e) in sparse(&data.comult(g, h).col(t / dk)) {
                            accumulate(&mut lhs, u * dk + t % dk, &c * &e);
                        }
                    }
                    let mut rhs = BTreeMap::new();
                    for (t, c) in sparse(&data.comult(g, grp.mul(h, k)).col(a)) {
                        for (u, e) in sparse(&data.comult(h, k).col(t % dhk)) {
                            accumulate(&mut rhs, (t / dhk) * dh * dk + u, &c * &e);
                        }
                    }
                    (prune(lhs) != prune(rhs)).then(|| format!("b{a}"))
                });
                r.check("gcoalgebra.coassociativity", &ops, witness);
            }
        }
    }
    for g in 0..m {
        for h in 0..m {
            let ops = format!("{name} {} on D_{}", grp.label(g), grp.label(h));
            let target = &data.doubles[data.crossing_target(g, h)];
            let c = data.crossing(g, h);
            let mut witness = is_algebra_map(&data.doubles[h], |u| c.apply(u), |u, v| target.mul(u, v), target.unit());
            if witness.is_none() && crate::exactlin::solve_inverse(c).is_err() {
                witness = Some("crossing is singular".into());
            }
            r.check("gcoalgebra.crossing_algebra_iso", &ops, witness);
        }
    }
    for g in 0..m {
        for h in 0..m {
            for k in 0..m {
                let ops = format!("{name} ({},{}) on D_{}", grp.label(g), grp.label(h), grp.label(k));
                let (first, second, composite) = match data.mode {
                    CoproductMode::Modified => (g, h, grp.mul(g, h)),
                    CoproductMode::Homomorphic => (h, g, grp.mul(g, h)),
                };
                let mid = data.crossing_target(first, k);
                let lhs = data.crossing(second, mid) * data.crossing(first, k);
                r.check("gcoalgebra.crossing_composition", &ops, mat_witness(&lhs, data.crossing(composite, k)));
            }
        }
    }
    for k in 0..m {
        for g in 0..m {
            for h in 0..m {
                let ops = format!("{name} {} on ({},{})", grp.label(k), grp.label(g), grp.label(h));
                let (tg, th) = (data.crossing_target(k, g), data.crossing_target(k, h));
                let tgh = data.crossing_target(k, grp.mul(g, h));
                let witness = if grp.mul(tg, th) != tgh {
                    Some("crossing does not respect the grading".into())
                } else {
                    let dh = data.doubles[h].dim();
                    let (cg, ch) = (data.crossing(k, g), data.crossing(k, h));
                    (0..data.doubles[grp.mul(g, h)].dim()).find_map(|a| {
                        let mut lhs = vec![Scalar::zero(); data.doubles[tg].dim() * data.doubles[th].dim()];
                        for (t, c) in sparse(&data.comult(g, h).col(a)) {
                            let v = kron_vec(&cg.col(t / dh), &ch.col(t % dh));
                            lhs.iter_mut().zip(v).for_each(|(o, x)| *o += &(&c * &x));
                        }
                        let mut rhs = vec![Scalar::zero(); lhs.len()];
                        for (t, c) in sparse(&data.crossing(k, grp.mul(g, h)).col(a)) {
                            rhs.iter_mut().zip(data.comult(tg, th).col(t)).for_each(|(o, x)| *o += &(&c * &x));
                        }
                        (lhs != rhs).then(|| format!("b{a}"))
                    })
                };
                r.check("gcoalgebra.crossing_comult", &ops, witness);
            }
        }
    }
    for g in 0..m {
        for h in 0..m {
            let ops = format!("{name} ({},{})", grp.label(g), grp.label(h));
            let (a, b) = (&data.doubles[h], &data.doubles[g]);
            let cand = data.r_bar_inverse_candidate();
            let one = kron_vec(a.unit(), b.unit());
            let rb = data.r_bar(g, h);
            let witness = if tensor_mul(a, b, rb, &cand) != one || tensor_mul(a, b, &cand, rb) != one {
                Some("candidate inverse does not multiply to 1".into())
            } else if a.dim() * b.dim() > BRUTE_FORCE_CAP {
                None
            } else {
                match data.solve_r_bar_inverse(g, h) {
                    Some(sol) if sol == cand => None,
                    Some(_) => Some("solved inverse differs from the candidate".into()),
                    None => Some("no right inverse".into()),
                }
            };
            r.check("gcoalgebra.r_bar_inverse", &ops, witness);
        }
    }
    r
}

fn tensor_rho(a: &DoubleModule, b: &DoubleModule, u: &[Scalar]) -> Mat {
    let mb = b.double().dim();
    let mut out = Mat::zeros(a.dim() * b.dim(), a.dim() * b.dim());
    for (t, c) in sparse(u) {
        out.add_scaled(&c, &kron(&a.action()[t / mb], &b.action()[t % mb]));
    }
    out
}

/// Compatibility of the module-category isomorphism with tensor products, with the
/// crossed action for every `k`, and the braiding `c_{X,Y}(x ⊗ y) = R̄_{g,h}.(y ⊗ x)`.
pub fn compare_with_double_modules(data: &GCoalgebraData, x: &CenterObject, y: &CenterObject) -> Result<Vec<DiagramReport>, GDoubleError> {
    if data.mode != CoproductMode::Modified {
        return Err(GDoubleError::Shape("the comparison uses the modified comultiplication".into()));
    }
    let action = &data.action;
    let grp = action.group();
    let (g, h) = (x.grade(), y.grade());
    let ops = format!("{} {} {}", action.name(), x.name(), y.name());
    let fx = yd_to_double_module(&data.doubles[g], x.yd())?;
    let fy = yd_to_double_module(&data.doubles[h], y.yd())?;
    let mut out = Vec::new();

    let xy = yd_tensor(action, x, y)?;
    let gh = grp.mul(g, h);
    let f_xy = yd_to_double_module(&data.doubles[gh], xy.yd())?;
    let delta = data.comult(g, h);
    let pulled: Vec<Mat> = (0..data.doubles[gh].dim()).map(|a| tensor_rho(&fx, &fy, &delta.col(a))).collect();
    let mismatch = f_xy.action().iter().zip(&pulled).enumerate().find_map(|(a, (p, q))| mat_witness(p, q).map(|w| format!("b{a}: {w}")));
    out.push(DiagramReport { diagram: DiagramId::MonDiagram, operands: ops.clone(), pass: mismatch.is_none(), witness: mismatch });

    for k in grp.elements() {
        let kx = crossed_action(action, k, x)?;
        let target = kx.grade();
        let f_kx = yd_to_double_module(&data.doubles[target], kx.yd())?;
        debug_assert_eq!(data.crossing_target(k, target), g);
        let pulled = fx.pullback(data.doubles[target].clone(), data.crossing(k, target));
        let mismatch = f_kx
            .action()
            .iter()
            .zip(pulled.action())
            .enumerate()
            .find_map(|(a, (p, q))| mat_witness(p, q).map(|w| format!("b{a}: {w}")));
        out.push(DiagramReport {
            diagram: DiagramId::CrossDiagram,
            operands: format!("{} {} on {}", action.name(), grp.label(k), x.name()),
            pass: mismatch.is_none(),
            witness: mismatch,
        });
    }

    let flip = leg_permutation(&[x.dim(), y.dim()], &[1, 0]);
    let rhs = &tensor_rho(&fy, &fx, data.r_bar(g, h)) * &flip;
    out.push(DiagramReport::compare(DiagramId::RBraiding, ops, &g_braiding(x, y), &rhs));
    Ok(out)
}

/// Runs [`validate_g_coalgebra`] and [`compare_with_double_modules`] on every pair of objects
/// whose tensor product has dimension at most [`TUPLE_DIM_CAP`].
pub fn double_suite(data: &GCoalgebraData, objects: &[CenterObject]) -> Report {
    let mut report = validate_g_coalgebra(data);
    let m = objects.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| objects[i].dim() * objects[j].dim() <= TUPLE_DIM_CAP)
        .collect();
    let parts: Vec<Report> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut r = Report::new();
            match compare_with_double_modules(data, &objects[i], &objects[j]) {
                Ok(ds) => ds.iter().for_each(|d| r.push(d.to_check())),
                Err(e) => r.push(crate::report::CheckResult::fail(
                    "diagram.mon_diagram",
                    format!("{} {}", objects[i].name(), objects[j].name()),
                    e.to_string(),
                )),
            }
            r
        })
        .collect();
    for p in parts {
        report.extend(p);
    }
    report
}

/// The regular module of every component, as an object of the center.
pub fn regular_objects(data: &GCoalgebraData) -> Result<Vec<CenterObject>, GDoubleError> {
    let grp = data.action.group();
    grp.elements()
        .map(|g| {
            let yd = double_module_to_yd(&DoubleModule::regular(&data.doubles[g]))?;
            Ok(CenterObject::new(&data.action, g, yd)?.renamed(format!("reg_{}", grp.label(g))))
        })
        .collect()
}
