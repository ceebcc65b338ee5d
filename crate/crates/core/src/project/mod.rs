//! Project files, named check suites and report emission.
//!
//! A project is a TOML document with exact scalars written as strings:
//!
//! ```toml
//! field = "rational"            # or "mod 5"
//! suites = ["hopf", "center"]
//!
//! [group.Z2]
//! labels = ["0", "1"]
//! table = [["0", "1"], ["1", "0"]]
//!
//! [hopf.H4]                     # basis, then structure constants in basis order
//! basis = ["1", "g", "x", "gx"]
//! mult = [["1", "0", ...], ...] # n rows of n² entries, column i·n + j holds e_i e_j
//! # unit, comult (n² rows of n), counit, antipode, optional antipode_inverse
//!
//! [automorphism.f_1]
//! hopf = "H4"
//! map = [[...]]                 # optional f2 and f2_inverse, coordinates in H ⊗ H
//!
//! [action.sweedler_z2]
//! group = "Z2"
//! automorphisms = ["f_0", "f_1"] # one per group element, in label order
//! # optional gauges: |G|² rows, row g·|G| + h holds b(g, h)
//! ```
//!
//! Gauge transformations (`[gauge.*]`: `source`, `target`, `element`) and
//! Yetter-Drinfeld modules (`[yd.*]`: `twist`, `action`, `coaction`, optional
//! `center_action` and `grade`) complete the format.

mod format;
mod suites;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::autoact::{ActionData, ComonoidalAutomorphism, GaugeTransformation};
use crate::group::FiniteGroup;
use crate::hopfcore::HopfAlgebra;
use crate::ydmod::YDModule;

pub use suites::{emit_report, run_suite};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 7] = ["hopf", "automorphism", "action", "yd", "center", "double", "all"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectError {
    #[error("{line}:{col}: {message}")]
    Parse { message: String, line: usize, col: usize },
    #[error("{line}:{col}: undefined {kind} {name:?}")]
    UnresolvedReference { kind: &'static str, name: String, line: usize, col: usize },
    #[error("{line}:{col}: bad scalar {text:?}")]
    BadScalar { text: String, line: usize, col: usize },
    #[error("{line}:{col}: {message}")]
    Invalid { message: String, line: usize, col: usize },
    #[error("unknown suite {0:?}; expected one of hopf, automorphism, action, yd, center, double, all")]
    UnknownSuite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Mod(u64),
}

#[derive(Clone, Debug)]
pub struct GaugeEntry {
    pub source: String,
    pub target: String,
    pub data: GaugeTransformation,
}

#[derive(Clone, Debug)]
pub struct ActionEntry {
    pub group: String,
    pub automorphisms: Vec<String>,
    pub data: ActionData,
}

#[derive(Clone, Debug)]
pub struct YdEntry {
    pub twist: String,
    /// Action name and grade label when the module is an object of the center.
    pub center: Option<(String, String)>,
    pub module: YDModule,
}

/// A resolved project: every reference points at a constructed object.
#[derive(Clone, Debug)]
pub struct ProjectFile {
    pub field: Field,
    pub suites: Vec<String>,
    pub groups: BTreeMap<String, FiniteGroup>,
    pub hopf: BTreeMap<String, Arc<HopfAlgebra>>,
    pub automorphisms: BTreeMap<String, Arc<ComonoidalAutomorphism>>,
    pub gauges: BTreeMap<String, GaugeEntry>,
    pub actions: BTreeMap<String, ActionEntry>,
    pub modules: BTreeMap<String, YdEntry>,
}

impl PartialEq for ProjectFile {
    fn eq(&self, other: &Self) -> bool {
        let names = |p: &ProjectFile| {
            (
                p.hopf.iter().map(|(k, h)| (k.clone(), h.name().to_string(), h.labels().to_vec())).collect::<Vec<_>>(),
                p.automorphisms.iter().map(|(k, a)| (k.clone(), a.name().to_string())).collect::<Vec<_>>(),
            )
        };
        self.field == other.field
            && self.suites == other.suites
            && self.groups == other.groups
            && names(self) == names(other)
            && self.hopf.values().zip(other.hopf.values()).all(|(a, b)| **a == **b)
            && self.automorphisms == other.automorphisms
            && self.gauges.len() == other.gauges.len()
            && self.gauges.iter().zip(&other.gauges).all(|((k, a), (l, b))| {
                k == l && a.source == b.source && a.target == b.target && a.data.a == b.data.a && a.data.a_inv == b.data.a_inv
            })
            && self.actions.len() == other.actions.len()
            && self.actions.iter().zip(&other.actions).all(|((k, a), (l, b))| {
                k == l
                    && a.group == b.group
                    && a.automorphisms == b.automorphisms
                    && a.data.name() == b.data.name()
                    && a.data.gauges() == b.data.gauges()
            })
            && self.modules.len() == other.modules.len()
            && self.modules.iter().zip(&other.modules).all(|((k, a), (l, b))| {
                k == l && a.twist == b.twist && a.center == b.center && a.module == b.module && a.module.name() == b.module.name()
            })
    }
}

impl ProjectFile {
    pub fn new(field: Field) -> Self {
        ProjectFile {
            field,
            suites: Vec::new(),
            groups: BTreeMap::new(),
            hopf: BTreeMap::new(),
            automorphisms: BTreeMap::new(),
            gauges: BTreeMap::new(),
            actions: BTreeMap::new(),
            modules: BTreeMap::new(),
        }
    }

    /// Registers `h` under its own name unless an equal algebra is already present;
    /// returns the key it is stored under.
    pub fn add_hopf(&mut self, h: &Arc<HopfAlgebra>) -> String {
        if let Some((k, _)) = self.hopf.iter().find(|(k, v)| ***v == **h && k.as_str() == h.name()) {
            return k.clone();
        }
        let key = self.fresh(h.name(), |p, k| p.hopf.contains_key(k));
        let renamed = HopfAlgebra::clone(h).renamed(key.clone());
        self.hopf.insert(key.clone(), Arc::new(renamed));
        key
    }

    /// Registers the automorphism and its Hopf algebra; returns its key.
    pub fn add_automorphism(&mut self, a: &ComonoidalAutomorphism) -> String {
        let hk = self.add_hopf(a.hopf());
        let hopf = self.hopf[&hk].clone();
        if let Some((k, _)) = self.automorphisms.iter().find(|(k, v)| {
            k.as_str() == a.name() && v.map() == a.map() && v.f2() == a.f2() && **v.hopf() == *hopf
        }) {
            return k.clone();
        }
        let key = self.fresh(a.name(), |p, k| p.automorphisms.contains_key(k));
        let rebuilt = ComonoidalAutomorphism::with_f2_inverse(key.clone(), hopf, a.map().clone(), a.f2().clone(), a.f2_inv().clone())
            .expect("shapes already checked");
        self.automorphisms.insert(key.clone(), Arc::new(rebuilt));
        key
    }

    /// Registers the action together with its group and automorphisms.
    pub fn add_action(&mut self, a: &ActionData) -> String {
        let grp = a.group().clone();
        let gk = match self.groups.iter().find(|(_, g)| **g == grp) {
            Some((k, _)) => k.clone(),
            None => {
                let key = self.fresh(&format!("G_{}", a.name()), |p, k| p.groups.contains_key(k));
                self.groups.insert(key.clone(), grp.clone());
                key
            }
        };
        let autos: Vec<String> = a.autos().iter().map(|f| self.add_automorphism(f)).collect();
        let resolved = autos.iter().map(|k| self.automorphisms[k].clone()).collect();
        let key = self.fresh(a.name(), |p, k| p.actions.contains_key(k));
        let data = ActionData::new(key.clone(), grp, resolved, a.gauges().to_vec()).expect("action already normalized");
        self.actions.insert(key.clone(), ActionEntry { group: gk, automorphisms: autos, data });
        key
    }

    /// Registers a Yetter-Drinfeld module, optionally as an object of an action's center.
    pub fn add_yd(&mut self, y: &YDModule, center: Option<(&str, &str)>) -> String {
        let tk = self.add_automorphism(y.twist());
        let twist = self.automorphisms[&tk].clone();
        let key = self.fresh(y.name(), |p, k| p.modules.contains_key(k));
        let grade = center.map(|(_, g)| g.to_string());
        let action = (0..y.hopf().dim()).map(|i| y.action(i).clone()).collect();
        let module = YDModule::from_action(key.clone(), twist, grade, action, y.coaction().clone()).expect("shapes already checked");
        let center = center.map(|(a, g)| (a.to_string(), g.to_string()));
        self.modules.insert(key.clone(), YdEntry { twist: tk, center, module });
        key
    }

    fn fresh(&self, base: &str, taken: impl Fn(&Self, &str) -> bool) -> String {
        if !taken(self, base) {
            return base.to_string();
        }
        (2..).map(|i| format!("{base}_{i}")).find(|k| !taken(self, k)).expect("unbounded")
    }
}

/// Parses and resolves a project; diagnostics carry 1-based line and column.
pub fn parse_project(text: &str) -> Result<ProjectFile, ProjectError> {
    format::parse(text)
}

/// The canonical text of a project; `parse_project` inverts it.
pub fn serialize_project(p: &ProjectFile) -> String {
    format::serialize(p)
}
