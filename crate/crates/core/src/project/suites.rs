use rayon::prelude::*;

use crate::autoact::{star_compose, validate_action, validate_comonoidal_automorphism, validate_gauge};
use crate::catalog::center_family;
use crate::eqcenter::{center_suite, CenterObject};
use crate::gdouble::{
    build_g_coalgebra, canonical_ev_pairing, double_module_to_yd, double_suite, regular_objects, validate_double,
    validate_pairing, yd_to_double_module, CoproductMode, DoubleAlgebra,
};
use crate::hopfcore::{dual_cop, regular_module, validate_hopf};
use crate::report::{CheckResult, Format, Report};
use crate::ydmod::{coaction_from_half_braiding, half_braiding, trivial_yd, twisted_adjoint, validate_yd, YDModule};

use super::{ProjectError, ProjectFile, SUITES};

/// Largest double whose regular module joins the objects of the double suite.
const REGULAR_DOUBLE_CAP: usize = 16;

/// Runs the named suite over every applicable object of the project, in name order.
pub fn run_suite(p: &ProjectFile, suite: &str) -> Result<Report, ProjectError> {
    if !SUITES.contains(&suite) {
        return Err(ProjectError::UnknownSuite(suite.to_string()));
    }
    let parts: Vec<Report> = match suite {
        "hopf" => hopf_suite(p),
        "automorphism" => automorphism_suite(p),
        "action" => action_suite(p),
        "yd" => yd_suite(p),
        "center" => center_suite_for(p),
        "double" => double_suite_for(p),
        _ => [hopf_suite, automorphism_suite, action_suite, yd_suite, center_suite_for, double_suite_for]
            .iter()
            .flat_map(|s| s(p))
            .collect(),
    };
    let mut report = Report::new();
    parts.into_iter().for_each(|r| report.extend(r));
    Ok(report)
}

pub fn emit_report(r: &Report, format: Format) -> String {
    r.render(format)
}

fn fail(id: &str, operands: &str, e: impl ToString) -> Report {
    let mut r = Report::new();
    r.push(CheckResult::fail(id, operands, e.to_string()));
    r
}

fn hopf_suite(p: &ProjectFile) -> Vec<Report> {
    let hs: Vec<_> = p.hopf.values().collect();
    hs.par_iter()
        .map(|h| {
            let mut r = validate_hopf(h);
            if h.antipode_inverse().is_some() {
                match dual_cop(h) {
                    Ok(d) => r.extend(validate_hopf(&d)),
                    Err(e) => r.extend(fail("hopf.dual_cop", h.name(), e)),
                }
            }
            r
        })
        .collect()
}

fn automorphism_suite(p: &ProjectFile) -> Vec<Report> {
    let autos: Vec<_> = p.automorphisms.values().collect();
    let mut out: Vec<Report> = autos.par_iter().map(|a| validate_comonoidal_automorphism(a)).collect();
    let valid: Vec<_> = autos.iter().zip(&out).filter(|(_, r)| r.all_pass()).map(|(a, _)| *a).collect();
    let pairs: Vec<_> = valid
        .iter()
        .flat_map(|a| valid.iter().map(move |b| (*a, *b)))
        .filter(|(a, b)| **a.hopf() == **b.hopf())
        .collect();
    out.par_extend(pairs.par_iter().map(|(a, b)| {
        let operands = format!("{} * {}", a.name(), b.name());
        let mut r = Report::new();
        let witness = match star_compose(a, b) {
            Ok(c) => validate_comonoidal_automorphism(&c).failures().next().map(|f| format!("{}: {}", f.id, f.witness.clone().unwrap_or_default())),
            Err(e) => Some(e.to_string()),
        };
        r.check("automorphism.star_closure", &operands, witness);
        r
    }));
    out.extend(p.gauges.values().map(|g| validate_gauge(&g.data)));
    out
}

fn action_suite(p: &ProjectFile) -> Vec<Report> {
    let actions: Vec<_> = p.actions.values().collect();
    actions.par_iter().map(|a| validate_action(&a.data)).collect()
}

fn round_trip(x: &YDModule) -> Report {
    let h = x.hopf();
    let gamma = half_braiding(x, &regular_module(h));
    let mut r = Report::new();
    let witness = match coaction_from_half_braiding(x.twist().clone(), x.module(), &gamma, x.grade().map(str::to_string)) {
        Ok(back) => crate::report::mat_witness(back.coaction(), x.coaction()),
        Err(e) => Some(e.to_string()),
    };
    r.check("yd.round_trip", x.name(), witness);
    r
}

fn yd_suite(p: &ProjectFile) -> Vec<Report> {
    let modules: Vec<_> = p.modules.values().collect();
    let mut out: Vec<Report> = modules
        .par_iter()
        .map(|y| {
            let mut r = validate_yd(&y.module);
            if r.all_pass() {
                r.extend(round_trip(&y.module));
            }
            r
        })
        .collect();
    let autos: Vec<_> = p.automorphisms.values().filter(|a| a.hopf().antipode().is_some()).collect();
    out.par_extend(autos.par_iter().map(|a| {
        let operands = a.name();
        let trivial_valid = validate_yd(&trivial_yd((*a).clone())).all_pass();
        let mut r = Report::new();
        r.check(
            "yd.trivial_module",
            operands,
            (trivial_valid != a.is_identity()).then(|| format!("trivial module valid: {trivial_valid}, f = id: {}", a.is_identity())),
        );
        match twisted_adjoint((*a).clone()) {
            Ok(ad) => {
                let ad = ad.renamed(format!("ad({operands})"));
                let v = validate_yd(&ad);
                let ok = v.all_pass();
                r.extend(v);
                if ok {
                    r.extend(round_trip(&ad));
                }
            }
            Err(e) => r.extend(fail("yd.twisted_adjoint", operands, e)),
        }
        r
    }));
    out
}

/// The first failing check among the Hopf axioms, the automorphisms and the action
/// conditions, which every center and double check presupposes.
fn precondition_failure(p: &ProjectFile, name: &str) -> Option<String> {
    let action = &p.actions[name].data;
    let mut reports = vec![validate_hopf(action.hopf())];
    reports.extend(action.autos().iter().map(|a| validate_comonoidal_automorphism(a)));
    reports.push(validate_action(action));
    let first = reports.iter().flat_map(|r| r.failures()).next().map(|f| format!("{} ({}) fails", f.id, f.operands));
    first
}

/// The standard family of the action plus the declared modules attached to it.
fn objects_for(p: &ProjectFile, name: &str) -> (Vec<CenterObject>, Report) {
    let action = &p.actions[name].data;
    let mut objects = center_family(action);
    let mut errors = Report::new();
    for y in p.modules.values() {
        let Some((a, g)) = &y.center else { continue };
        if a != name {
            continue;
        }
        let grade = action.group().index_of(g).expect("resolved at parse time");
        match CenterObject::new(action, grade, y.module.clone()) {
            Ok(o) => objects.push(o),
            Err(e) => errors.extend(fail("center.object", y.module.name(), e)),
        }
    }
    (objects, errors)
}

fn center_suite_for(p: &ProjectFile) -> Vec<Report> {
    p.actions
        .keys()
        .map(|name| {
            if let Some(w) = precondition_failure(p, name) {
                return fail("center.preconditions", name, w);
            }
            let (objects, mut r) = objects_for(p, name);
            r.extend(center_suite(&p.actions[name].data, &objects));
            r
        })
        .collect()
}

fn double_suite_for(p: &ProjectFile) -> Vec<Report> {
    let hs: Vec<_> = p.hopf.values().filter(|h| h.antipode_inverse().is_some()).collect();
    let mut out: Vec<Report> = hs
        .par_iter()
        .map(|h| match canonical_ev_pairing(h) {
            Ok(pairing) => validate_pairing(&pairing),
            Err(e) => fail("pairing.canonical", h.name(), e),
        })
        .collect();
    let autos: Vec<_> = p
        .automorphisms
        .values()
        .filter(|a| a.has_trivial_f2() && a.hopf().antipode_inverse().is_some())
        .collect();
    out.par_extend(autos.par_iter().map(|a| match DoubleAlgebra::from_twist((*a).clone()) {
        Ok(d) => validate_double(&d),
        Err(e) => fail("double.construct", a.name(), e),
    }));
    for (name, entry) in &p.actions {
        let action = &entry.data;
        if !action.is_strict() || action.hopf().antipode_inverse().is_none() {
            continue;
        }
        if let Some(w) = precondition_failure(p, name) {
            out.push(fail("double.preconditions", name, w));
            continue;
        }
        let data = match build_g_coalgebra(action, CoproductMode::Modified) {
            Ok(d) => d,
            Err(e) => {
                out.push(fail("gcoalgebra.construct", name, e));
                continue;
            }
        };
        let (mut objects, mut r) = objects_for(p, name);
        if data.double(0).dim() <= REGULAR_DOUBLE_CAP {
            match regular_objects(&data) {
                Ok(regs) => objects.extend(regs),
                Err(e) => r.extend(fail("double.regular_module", name, e)),
            }
        }
        let trips: Vec<Report> = objects
            .par_iter()
            .map(|x| {
                let mut t = Report::new();
                let witness = yd_to_double_module(data.double(x.grade()), x.yd())
                    .and_then(|m| double_module_to_yd(&m))
                    .map(|back| crate::report::mat_witness(back.coaction(), x.yd().coaction()))
                    .unwrap_or_else(|e| Some(e.to_string()));
                t.check("double.round_trip", &format!("{name} {}", x.name()), witness);
                t
            })
            .collect();
        trips.into_iter().for_each(|t| r.extend(t));
        r.extend(double_suite(&data, &objects));
        out.push(r);
    }
    out
}
