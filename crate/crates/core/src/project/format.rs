use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::autoact::{ActionData, ComonoidalAutomorphism, GaugeTransformation};
use crate::exactlin::{Mat, Scalar, Vector};
use crate::group::FiniteGroup;
use crate::hopfcore::HopfAlgebra;
use crate::ydmod::YDModule;

use super::{ActionEntry, Field, GaugeEntry, ProjectError, ProjectFile, YdEntry, SUITES};

type S = Spanned<String>;

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawProject {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<S>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    suites: Vec<S>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    group: BTreeMap<String, RawGroup>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    hopf: BTreeMap<String, RawHopf>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    automorphism: BTreeMap<String, RawAutomorphism>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    gauge: BTreeMap<String, RawGauge>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    action: BTreeMap<String, RawAction>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    yd: BTreeMap<String, RawYd>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    labels: Vec<String>,
    table: Vec<Vec<S>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    basis: Vec<String>,
    mult: Vec<Vec<S>>,
    unit: Vec<S>,
    comult: Vec<Vec<S>>,
    counit: Vec<S>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<Vec<S>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode_inverse: Option<Vec<Vec<S>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAutomorphism {
    hopf: S,
    map: Vec<Vec<S>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f2: Option<Vec<S>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f2_inverse: Option<Vec<S>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGauge {
    source: S,
    target: S,
    element: Vec<S>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    group: S,
    automorphisms: Vec<S>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gauges: Option<Vec<Vec<S>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawYd {
    twist: S,
    action: Vec<Vec<Vec<S>>>,
    coaction: Vec<Vec<S>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    center_action: Option<S>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grade: Option<S>,
}

struct Ctx<'a> {
    text: &'a str,
    field: Field,
}

impl Ctx<'_> {
    fn position(&self, span: Range<usize>) -> (usize, usize) {
        let upto = &self.text[..span.start.min(self.text.len())];
        let line = upto.matches('\n').count() + 1;
        let col = upto.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn invalid(&self, span: Range<usize>, message: impl Into<String>) -> ProjectError {
        let (line, col) = self.position(span);
        ProjectError::Invalid { message: message.into(), line, col }
    }

    fn unresolved(&self, kind: &'static str, name: &S) -> ProjectError {
        let (line, col) = self.position(name.span());
        ProjectError::UnresolvedReference { kind, name: name.get_ref().clone(), line, col }
    }

    fn scalar(&self, s: &S) -> Result<Scalar, ProjectError> {
        let bad = || {
            let (line, col) = self.position(s.span());
            ProjectError::BadScalar { text: s.get_ref().clone(), line, col }
        };
        let text = s.get_ref().trim();
        match self.field {
            Field::Rational => {
                if text.contains("mod") {
                    return Err(bad());
                }
                text.parse().map_err(|_| bad())
            }
            Field::Mod(p) => {
                let body = match text.split_once("mod") {
                    Some((k, q)) if q.trim().parse::<u64>().ok() == Some(p) => k.trim(),
                    Some(_) => return Err(bad()),
                    None => text,
                };
                let value: i64 = body.parse().map_err(|_| bad())?;
                Ok(Scalar::modp(value, p))
            }
        }
    }

    fn vector(&self, v: &[S]) -> Result<Vector, ProjectError> {
        v.iter().map(|s| self.scalar(s)).collect()
    }

    fn matrix(&self, rows: &[Vec<S>], cols: usize, at: Range<usize>) -> Result<Mat, ProjectError> {
        let rows = rows.iter().map(|r| self.vector(r)).collect::<Result<Vec<_>, _>>()?;
        Mat::try_from_rows(rows, cols).ok_or_else(|| self.invalid(at, "rows of unequal length"))
    }
}

fn parse_field(text: &str, field: Option<&S>) -> Result<Field, ProjectError> {
    let Some(f) = field else { return Ok(Field::Rational) };
    let ctx = Ctx { text, field: Field::Rational };
    let raw = f.get_ref().trim();
    if raw == "rational" {
        return Ok(Field::Rational);
    }
    let p = raw.strip_prefix("mod").map(str::trim).and_then(|p| p.parse::<u64>().ok());
    match p {
        Some(p) if format!("0 mod {p}").parse::<Scalar>().is_ok() => Ok(Field::Mod(p)),
        _ => Err(ctx.invalid(f.span(), format!("field must be \"rational\" or \"mod p\" with p prime, got {raw:?}"))),
    }
}

pub(super) fn parse(text: &str) -> Result<ProjectFile, ProjectError> {
    let raw: RawProject = toml::from_str(text).map_err(|e| {
        let (line, col) = Ctx { text, field: Field::Rational }.position(e.span().unwrap_or(0..0));
        ProjectError::Parse { message: e.message().trim().to_string(), line, col }
    })?;
    let field = parse_field(text, raw.field.as_ref())?;
    let ctx = Ctx { text, field };
    let mut p = ProjectFile::new(field);

    for s in &raw.suites {
        if !SUITES.contains(&s.get_ref().as_str()) {
            return Err(ProjectError::UnknownSuite(s.get_ref().clone()));
        }
        p.suites.push(s.get_ref().clone());
    }

    for (name, g) in &raw.group {
        let index = |s: &S| g.labels.iter().position(|l| l == s.get_ref()).ok_or_else(|| ctx.unresolved("group element", s));
        let table = g
            .table
            .iter()
            .map(|row| row.iter().map(index).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let at = g.table.first().and_then(|r| r.first()).map_or(0..0, |s| s.span());
        let grp = FiniteGroup::from_table(g.labels.clone(), table).map_err(|e| ctx.invalid(at, format!("group {name}: {e}")))?;
        p.groups.insert(name.clone(), grp);
    }

    for (name, h) in &raw.hopf {
        let n = h.basis.len();
        let at = h.unit.first().map_or(0..0, |s| s.span());
        let mat = |rows: &Vec<Vec<S>>, cols| ctx.matrix(rows, cols, at.clone());
        let antipode = h.antipode.as_ref().map(|s| mat(s, n)).transpose()?;
        let antipode_inverse = match &h.antipode_inverse {
            Some(s) => Some(mat(s, n)?),
            None => antipode.as_ref().and_then(|s| crate::exactlin::solve_inverse(s).ok()),
        };
        let hopf = HopfAlgebra::with_antipode_inverse(
            name.clone(),
            h.basis.clone(),
            mat(&h.mult, n * n)?,
            ctx.vector(&h.unit)?,
            mat(&h.comult, n)?,
            ctx.vector(&h.counit)?,
            antipode,
            antipode_inverse,
        )
        .map_err(|e| ctx.invalid(at.clone(), format!("hopf {name}: {e}")))?;
        p.hopf.insert(name.clone(), Arc::new(hopf));
    }

    for (name, a) in &raw.automorphism {
        let hopf = p.hopf.get(a.hopf.get_ref()).ok_or_else(|| ctx.unresolved("hopf", &a.hopf))?.clone();
        let n = hopf.dim();
        let at = a.hopf.span();
        let map = ctx.matrix(&a.map, n, at.clone())?;
        let f2 = match &a.f2 {
            Some(v) => ctx.vector(v)?,
            None => hopf.unit_tensor(2),
        };
        let built = match &a.f2_inverse {
            Some(v) => ComonoidalAutomorphism::with_f2_inverse(name.clone(), hopf, map, f2, ctx.vector(v)?),
            None => ComonoidalAutomorphism::new(name.clone(), hopf, map, f2),
        };
        let auto = built.map_err(|e| ctx.invalid(at, format!("automorphism {name}: {e}")))?;
        p.automorphisms.insert(name.clone(), Arc::new(auto));
    }

    for (name, g) in &raw.gauge {
        let source = p.automorphisms.get(g.source.get_ref()).ok_or_else(|| ctx.unresolved("automorphism", &g.source))?;
        let target = p.automorphisms.get(g.target.get_ref()).ok_or_else(|| ctx.unresolved("automorphism", &g.target))?;
        let element = ctx.vector(&g.element)?;
        let t = GaugeTransformation::new(source.clone(), target.clone(), element)
            .map_err(|e| ctx.invalid(g.source.span(), format!("gauge {name}: {e}")))?;
        p.gauges.insert(
            name.clone(),
            GaugeEntry { source: g.source.get_ref().clone(), target: g.target.get_ref().clone(), data: t },
        );
    }

    for (name, a) in &raw.action {
        let grp = p.groups.get(a.group.get_ref()).ok_or_else(|| ctx.unresolved("group", &a.group))?.clone();
        let autos = a
            .automorphisms
            .iter()
            .map(|s| p.automorphisms.get(s.get_ref()).cloned().ok_or_else(|| ctx.unresolved("automorphism", s)))
            .collect::<Result<Vec<_>, _>>()?;
        let Some(first) = autos.first() else {
            return Err(ctx.invalid(a.group.span(), format!("action {name} has no automorphisms")));
        };
        let m = grp.order();
        let gauges = match &a.gauges {
            Some(rows) => rows.iter().map(|r| ctx.vector(r)).collect::<Result<Vec<_>, _>>()?,
            None => vec![first.hopf().unit().clone(); m * m],
        };
        let data = ActionData::new(name.clone(), grp, autos, gauges)
            .map_err(|e| ctx.invalid(a.group.span(), format!("action {name}: {e}")))?;
        p.actions.insert(
            name.clone(),
            ActionEntry {
                group: a.group.get_ref().clone(),
                automorphisms: a.automorphisms.iter().map(|s| s.get_ref().clone()).collect(),
                data,
            },
        );
    }

    for (name, y) in &raw.yd {
        let twist = p.automorphisms.get(y.twist.get_ref()).ok_or_else(|| ctx.unresolved("automorphism", &y.twist))?.clone();
        let at = y.twist.span();
        let d = y.coaction.first().map_or(0, Vec::len);
        let action = y.action.iter().map(|m| ctx.matrix(m, d, at.clone())).collect::<Result<Vec<_>, _>>()?;
        let coaction = ctx.matrix(&y.coaction, d, at.clone())?;
        let center = match (&y.center_action, &y.grade) {
            (Some(a), Some(g)) => {
                let entry = p.actions.get(a.get_ref()).ok_or_else(|| ctx.unresolved("action", a))?;
                entry.data.group().index_of(g.get_ref()).ok_or_else(|| ctx.unresolved("group element", g))?;
                Some((a.get_ref().clone(), g.get_ref().clone()))
            }
            (None, None) => None,
            (Some(s), None) | (None, Some(s)) => {
                return Err(ctx.invalid(s.span(), format!("yd {name}: center_action and grade go together")));
            }
        };
        let grade = center.as_ref().map(|(_, g)| g.clone());
        let module = YDModule::from_action(name.clone(), twist, grade, action, coaction)
            .map_err(|e| ctx.invalid(at, format!("yd {name}: {e}")))?;
        p.modules.insert(name.clone(), YdEntry { twist: y.twist.get_ref().clone(), center, module });
    }
    Ok(p)
}

fn s(x: impl Into<String>) -> S {
    Spanned::new(0..0, x.into())
}

fn write_scalar(field: Field, c: &Scalar) -> S {
    match (field, c) {
        (Field::Mod(_), Scalar::Mod { value, .. }) => s(value.to_string()),
        _ => s(c.to_string()),
    }
}

fn write_vector(field: Field, v: &[Scalar]) -> Vec<S> {
    v.iter().map(|c| write_scalar(field, c)).collect()
}

fn write_matrix(field: Field, m: &Mat) -> Vec<Vec<S>> {
    m.to_rows().iter().map(|r| write_vector(field, r)).collect()
}

pub(super) fn serialize(p: &ProjectFile) -> String {
    let f = p.field;
    let mut raw = RawProject {
        field: Some(s(match f {
            Field::Rational => "rational".to_string(),
            Field::Mod(q) => format!("mod {q}"),
        })),
        suites: p.suites.iter().map(s).collect(),
        ..RawProject::default()
    };
    for (name, g) in &p.groups {
        let table = g.table().iter().map(|row| row.iter().map(|&k| s(g.label(k))).collect()).collect();
        raw.group.insert(name.clone(), RawGroup { labels: g.labels().to_vec(), table });
    }
    for (name, h) in &p.hopf {
        let computed = h.antipode().and_then(|a| crate::exactlin::solve_inverse(a).ok());
        let antipode_inverse = match (h.antipode_inverse(), computed.as_ref()) {
            (Some(given), Some(c)) if given == c => None,
            (None, None) => None,
            (given, _) => given.map(|m| write_matrix(f, m)),
        };
        raw.hopf.insert(
            name.clone(),
            RawHopf {
                basis: h.labels().to_vec(),
                mult: write_matrix(f, h.mult()),
                unit: write_vector(f, h.unit()),
                comult: write_matrix(f, h.comult()),
                counit: write_vector(f, h.counit()),
                antipode: h.antipode().map(|m| write_matrix(f, m)),
                antipode_inverse,
            },
        );
    }
    for (name, a) in &p.automorphisms {
        let hopf = p.hopf.iter().find(|(_, h)| ***h == **a.hopf()).map(|(k, _)| k.clone()).unwrap_or_default();
        let trivial = a.has_trivial_f2();
        let computed = a.hopf().inverse_tensor(a.f2(), 2);
        raw.automorphism.insert(
            name.clone(),
            RawAutomorphism {
                hopf: s(hopf),
                map: write_matrix(f, a.map()),
                f2: (!trivial).then(|| write_vector(f, a.f2())),
                f2_inverse: (computed.as_ref() != Some(a.f2_inv())).then(|| write_vector(f, a.f2_inv())),
            },
        );
    }
    for (name, g) in &p.gauges {
        raw.gauge.insert(
            name.clone(),
            RawGauge { source: s(&g.source), target: s(&g.target), element: write_vector(f, &g.data.a) },
        );
    }
    for (name, a) in &p.actions {
        let strict_gauges = a.data.gauges().iter().all(|b| b == a.data.hopf().unit());
        raw.action.insert(
            name.clone(),
            RawAction {
                group: s(&a.group),
                automorphisms: a.automorphisms.iter().map(s).collect(),
                gauges: (!strict_gauges).then(|| a.data.gauges().iter().map(|b| write_vector(f, b)).collect()),
            },
        );
    }
    for (name, y) in &p.modules {
        let n = y.module.hopf().dim();
        raw.yd.insert(
            name.clone(),
            RawYd {
                twist: s(&y.twist),
                action: (0..n).map(|i| write_matrix(f, y.module.action(i))).collect(),
                coaction: write_matrix(f, y.module.coaction()),
                center_action: y.center.as_ref().map(|(a, _)| s(a)),
                grade: y.center.as_ref().map(|(_, g)| s(g)),
            },
        );
    }
    toml::to_string(&raw).expect("project tables serialize").lines().map(split_rows).collect()
}

/// Puts each top-level element of a nested array on its own line.
fn split_rows(line: &str) -> String {
    let Some((key, value)) = line.split_once(" = [[") else { return format!("{line}\n") };
    let body = &value[..value.len() - 1];
    let mut out = format!("{key} = [\n");
    let (mut depth, mut quoted, mut start) = (0usize, false, 0usize);
    let full = format!("[{body}");
    for (i, &b) in full.as_bytes().iter().enumerate() {
        match b {
            b'"' if i == 0 || full.as_bytes()[i - 1] != b'\\' => quoted = !quoted,
            b'[' if !quoted => depth += 1,
            b']' if !quoted => {
                depth -= 1;
                if depth == 0 {
                    out.push_str(&format!("    {},\n", &full[start..=i]));
                    start = i + 1;
                    while full[start..].starts_with(", ") {
                        start += 2;
                    }
                }
            }
            _ => {}
        }
    }
    out.push_str("]\n");
    out
}
