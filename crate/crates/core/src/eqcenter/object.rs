use crate::autoact::ActionData;
use crate::ydmod::{trivial_yd, validate_yd, YDModule};

use super::CenterError;

/// A twisted Yetter-Drinfeld module sitting in the component of `Z_G(H)` graded by
/// `grade`: its twist is the automorphism `f_grade` of the action.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterObject {
    grade: usize,
    yd: YDModule,
}

impl CenterObject {
    /// Checks the twist against `f_grade` and validates the module.
    pub fn new(action: &ActionData, grade: usize, yd: YDModule) -> Result<Self, CenterError> {
        let obj = Self::checked_grade(action, grade, yd)?;
        let report = validate_yd(&obj.yd);
        let failed = report.failures().next().map(|f| format!("{} {}", f.id, f.witness.clone().unwrap_or_default()));
        match failed {
            Some(why) => Err(CenterError::Invalid(format!("{}: {why}", obj.yd.name()))),
            None => Ok(obj),
        }
    }

    /// Checks the grade bookkeeping only; the Yetter-Drinfeld axioms are the caller's claim.
    pub(crate) fn checked_grade(action: &ActionData, grade: usize, yd: YDModule) -> Result<Self, CenterError> {
        let g = action.group();
        if grade >= g.order() {
            return Err(CenterError::GradeMismatch(format!("grade index {grade} outside the group")));
        }
        if **yd.twist() != **action.auto(grade) {
            return Err(CenterError::GradeMismatch(format!(
                "{} is twisted by {}, not by the automorphism at {}",
                yd.name(),
                yd.twist().name(),
                g.label(grade)
            )));
        }
        let label = g.label(grade).to_string();
        Ok(CenterObject { grade, yd: yd.with_grade(Some(label)) })
    }

    /// The monoidal unit: `k` in the identity component.
    pub fn unit(action: &ActionData) -> Self {
        let e = action.group().identity();
        Self::checked_grade(action, e, trivial_yd(action.auto(e).clone())).expect("f_e is the identity")
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn yd(&self) -> &YDModule {
        &self.yd
    }

    pub fn into_yd(self) -> YDModule {
        self.yd
    }

    pub fn name(&self) -> &str {
        self.yd.name()
    }

    pub fn dim(&self) -> usize {
        self.yd.dim()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.yd = self.yd.renamed(name);
        self
    }
}
