use rayon::prelude::*;

use crate::autoact::ActionData;
use crate::exactlin::{kron, Mat};
use crate::report::{CheckResult, DiagramId, DiagramReport, Report};
use crate::ydmod::{half_braiding, half_braiding_inverse, rho_tensor2, validate_yd, validate_yd_morphism};

use super::ops::{compare_crossed_coactions, ClosedForm, compositor, crossed_action, g_braiding, yd_tensor};
use super::{CenterError, CenterObject};

/// Tuples whose total dimension exceeds this are skipped by [`center_suite`].
pub const TUPLE_DIM_CAP: usize = 729;

fn ops3(a: &ActionData, x: &CenterObject, y: &CenterObject, z: &CenterObject) -> String {
    format!("{} {} {} {}", a.name(), x.name(), y.name(), z.name())
}

/// The two hexagon-type diagrams for `X` in grade `g`, `Y` in grade `h`, any `Z`:
/// `c_{X⊗Y,Z} = (Φ_{g,h,Z} ⊗ X ⊗ Y)(c_{X,Φ_h(Z)} ⊗ Y)(X ⊗ c_{Y,Z})` and
/// `(Φ²_g(Y,Z) ⊗ X) c_{X,Y⊗Z} = (Φ_g(Y) ⊗ c_{X,Z})(c_{X,Y} ⊗ Z)`.
pub fn check_heptagons(
    action: &ActionData,
    x: &CenterObject,
    y: &CenterObject,
    z: &CenterObject,
) -> Result<(DiagramReport, DiagramReport), CenterError> {
    let h = action.hopf();
    let (g, k) = (x.grade(), y.grade());
    let (dx, dy, dz) = (x.dim(), y.dim(), z.dim());
    let operands = ops3(action, x, y, z);
    let zm = z.yd().module();

    let xy = yd_tensor(action, x, y)?;
    let lhs = g_braiding(&xy, z);
    let first = kron(&Mat::identity(dx), &g_braiding(y, z));
    let middle = kron(&half_braiding(x.yd(), &zm.pullback(action.auto(k).map())), &Mat::identity(dy));
    let last = kron(&zm.rho(action.b(g, k)), &Mat::identity(dx * dy));
    let rhs = &(&last * &middle) * &first;
    let hepta1 = DiagramReport::compare(DiagramId::Hepta1, operands.clone(), &lhs, &rhs);

    let yz = y.yd().module().tensor(zm);
    let lhs = &kron(&rho_tensor2(h, y.yd().module(), zm, action.auto(g).f2()), &Mat::identity(dx))
        * &half_braiding(x.yd(), &yz);
    let rhs = &kron(&Mat::identity(dy), &g_braiding(x, z)) * &kron(&g_braiding(x, y), &Mat::identity(dz));
    let hepta2 = DiagramReport::compare(DiagramId::Hepta2, operands, &lhs, &rhs);
    Ok((hepta1, hepta2))
}

/// Compatibility of `Φ_k` with the braiding, both paths evaluated on `Φ_k(X ⊗ Y)`.
pub fn check_action_braid(action: &ActionData, k: usize, x: &CenterObject, y: &CenterObject) -> Result<DiagramReport, CenterError> {
    let grp = action.group();
    let h = action.hopf();
    let g = x.grade();
    let (xm, ym) = (x.yd().module(), y.yd().module());
    let id_x = Mat::identity(x.dim());
    let phi = action.auto(k);

    let path_a = &(&kron(&ym.rho(action.b(k, g)), &id_x)
        * &rho_tensor2(h, &ym.pullback(action.auto(g).map()), xm, phi.f2()))
        * &g_braiding(x, y);

    let kx = crossed_action(action, k, x)?;
    let ky = crossed_action(action, k, y)?;
    let kgk = grp.conjugate(k, g);
    let path_b = &(&kron(&ym.rho(action.b(kgk, k)), &id_x) * &g_braiding(&kx, &ky)) * &rho_tensor2(h, xm, ym, phi.f2());

    let operands = format!("{} {} on {} {}", action.name(), grp.label(k), x.name(), y.name());
    Ok(DiagramReport::compare(DiagramId::ActionBraid, operands, &path_a, &path_b))
}

/// Compositor coherence `Φ_{gh,k} Φ_{g,h,Φ_k X} = Φ_{g,hk} Φ_g(Φ_{h,k})` and the unit
/// coherence `Φ_{g,e} = id = Φ_{e,g}`, as matrices on `X`.
pub fn check_action_coherence(
    action: &ActionData,
    g: usize,
    h: usize,
    k: usize,
    x: &CenterObject,
) -> (DiagramReport, DiagramReport) {
    let grp = action.group();
    let hopf = action.hopf();
    let m = x.yd().module();
    let lhs = m.rho(&hopf.mul(action.b(grp.mul(g, h), k), &action.auto(k).apply(action.b(g, h))));
    let rhs = m.rho(&hopf.mul(action.b(g, grp.mul(h, k)), action.b(h, k)));
    let operands = format!("{} ({},{},{}) on {}", action.name(), grp.label(g), grp.label(h), grp.label(k), x.name());
    let comp = DiagramReport::compare(DiagramId::CompositorCoherence, operands, &lhs, &rhs);

    let e = grp.identity();
    let d = x.dim();
    let stacked = |a: &Mat, b: &Mat| Mat::from_fn(2 * d, d, |r, c| if r < d { a.get(r, c).clone() } else { b.get(r - d, c).clone() });
    let lhs = stacked(&m.rho(action.b(g, e)), &m.rho(action.b(e, g)));
    let rhs = stacked(&Mat::identity(d), &Mat::identity(d));
    let operands = format!("{} {} on {}", action.name(), grp.label(g), x.name());
    let unit = DiagramReport::compare(DiagramId::UnitCoherence, operands, &lhs, &rhs);
    (comp, unit)
}

/// `c_{X,Y}` is a morphism `X ⊗ Y → Φ_g(Y) ⊗ X` in `Z_G(H)` and is invertible.
pub fn check_braiding_morphism(action: &ActionData, x: &CenterObject, y: &CenterObject) -> Result<Report, CenterError> {
    let c = g_braiding(x, y);
    let source = yd_tensor(action, x, y)?;
    let target = yd_tensor(action, &crossed_action(action, x.grade(), y)?, x)?;
    let mut r = validate_yd_morphism(source.yd(), target.yd(), &c);
    let operands = format!("{} {} {}", action.name(), x.name(), y.name());
    let inverse = match half_braiding_inverse(x.yd(), y.yd().module()) {
        Ok(ci) => crate::report::mat_witness(&(&ci * &c), &Mat::identity(c.cols()))
            .or_else(|| crate::report::mat_witness(&(&c * &ci), &Mat::identity(c.rows()))),
        Err(e) => Some(e.to_string()),
    };
    r.check("center.braiding_invertible", &operands, inverse);
    Ok(r)
}

fn err_check(id: &str, operands: &str, e: CenterError) -> Report {
    let mut r = Report::new();
    r.push(CheckResult::fail(id, operands, e.to_string()));
    r
}

fn same_object(a: &CenterObject, b: &CenterObject) -> Option<String> {
    if a.grade() != b.grade() {
        return Some("grades differ".into());
    }
    if a.yd().module() != b.yd().module() {
        return Some("actions differ".into());
    }
    crate::report::mat_witness(a.yd().coaction(), b.yd().coaction()).map(|w| format!("coactions differ: {w}"))
}

/// Every structural check of `Z_G(H)` on a family of objects: closure of the
/// tensor product and the crossed action, strict associativity and unit laws,
/// compositors as morphisms, all coherence diagrams, and the comparison of the
/// transported coaction with its closed form.
///
/// Tuples are evaluated in parallel; the report order depends only on the input.
pub fn center_suite(action: &ActionData, objects: &[CenterObject]) -> Report {
    let grp = action.group();
    let m = objects.len();
    let unit = CenterObject::unit(action);
    let mut report = Report::new();
    let collect = |report: &mut Report, parts: Vec<Report>| {
        for p in parts {
            report.extend(p);
        }
    };

    let singles: Vec<Report> = objects
        .par_iter()
        .map(|x| {
            let mut r = validate_yd(x.yd());
            let ops = format!("{} {}", action.name(), x.name());
            let left = yd_tensor(action, &unit, x).map(|u| same_object(&u, x));
            let right = yd_tensor(action, x, &unit).map(|u| same_object(&u, x));
            match (left, right) {
                (Ok(l), Ok(rr)) => r.check("center.unit_law", &ops, l.or(rr)),
                (Err(e), _) | (_, Err(e)) => r.extend(err_check("center.unit_law", &ops, e)),
            }
            for k in grp.elements() {
                let ops = format!("{} {} on {}", action.name(), grp.label(k), x.name());
                match crossed_action(action, k, x) {
                    Ok(_) => r.check("center.crossed_closure", &ops, None),
                    Err(e) => r.extend(err_check("center.crossed_closure", &ops, e)),
                }
                for form in [ClosedForm::Amended, ClosedForm::Printed] {
                    match compare_crossed_coactions(action, k, x, form) {
                        Ok(c) => r.push(c),
                        Err(e) => r.extend(err_check(&format!("center.crossed_{}_form", form.as_str()), &ops, e)),
                    }
                }
                for g in grp.elements() {
                    let ops = format!("{} b({},{}) on {}", action.name(), grp.label(g), grp.label(k), x.name());
                    match compositor(action, g, k, x) {
                        Ok(mor) => {
                            let v = validate_yd_morphism(&mor.source, &mor.target, &mor.map);
                            let bad = v.failures().next().map(|f| format!("{} {}", f.id, f.witness.clone().unwrap_or_default()));
                            r.check("center.compositor_morphism", &ops, bad);
                        }
                        Err(e) => r.extend(err_check("center.compositor_morphism", &ops, e)),
                    }
                    for l in grp.elements() {
                        let (comp, unit_c) = check_action_coherence(action, g, k, l, x);
                        r.push(comp.to_check());
                        if l == grp.identity() && k == grp.identity() {
                            r.push(unit_c.to_check());
                        }
                    }
                }
            }
            r
        })
        .collect();
    collect(&mut report, singles);

    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| objects[i].dim() * objects[j].dim() <= TUPLE_DIM_CAP)
        .collect();
    let pair_reports: Vec<Report> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&objects[i], &objects[j]);
            let ops = format!("{} {} {}", action.name(), x.name(), y.name());
            let mut r = Report::new();
            match yd_tensor(action, x, y) {
                Ok(xy) => {
                    let v = validate_yd(xy.yd());
                    let bad = v.failures().next().map(|f| format!("{} {}", f.id, f.witness.clone().unwrap_or_default()));
                    r.check("center.tensor_closure", &ops, bad);
                }
                Err(e) => r.extend(err_check("center.tensor_closure", &ops, e)),
            }
            match check_braiding_morphism(action, x, y) {
                Ok(b) => r.extend(b),
                Err(e) => r.extend(err_check("center.braiding_morphism", &ops, e)),
            }
            for k in grp.elements() {
                match check_action_braid(action, k, x, y) {
                    Ok(d) => r.push(d.to_check()),
                    Err(e) => r.extend(err_check("diagram.action_braid", &ops, e)),
                }
            }
            r
        })
        .collect();
    collect(&mut report, pair_reports);

    let triples: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|i| (0..m).flat_map(move |j| (0..m).map(move |l| (i, j, l))))
        .filter(|&(i, j, l)| objects[i].dim() * objects[j].dim() * objects[l].dim() <= TUPLE_DIM_CAP)
        .collect();
    let triple_reports: Vec<Report> = triples
        .par_iter()
        .map(|&(i, j, l)| {
            let (x, y, z) = (&objects[i], &objects[j], &objects[l]);
            let ops = ops3(action, x, y, z);
            let mut r = Report::new();
            let assoc = yd_tensor(action, x, y)
                .and_then(|xy| yd_tensor(action, &xy, z))
                .and_then(|left| yd_tensor(action, y, z).and_then(|yz| yd_tensor(action, x, &yz)).map(|right| same_object(&left, &right)));
            match assoc {
                Ok(w) => r.check("center.associativity", &ops, w),
                Err(e) => r.extend(err_check("center.associativity", &ops, e)),
            }
            match check_heptagons(action, x, y, z) {
                Ok((a, b)) => {
                    r.push(a.to_check());
                    r.push(b.to_check());
                }
                Err(e) => r.extend(err_check("diagram.hepta1", &ops, e)),
            }
            r
        })
        .collect();
    collect(&mut report, triple_reports);
    report
}
