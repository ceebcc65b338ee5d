//! Check results, aggregated reports and their two output formats.

use std::fmt::{self, Write as _};

use crate::exactlin::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub operands: String,
    pub pass: bool,
    /// Present exactly when `pass` is false.
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn new(id: impl Into<String>, operands: impl Into<String>, witness: Option<String>) -> Self {
        CheckResult { id: id.into(), operands: operands.into(), pass: witness.is_none(), witness }
    }

    pub fn pass(id: impl Into<String>, operands: impl Into<String>) -> Self {
        Self::new(id, operands, None)
    }

    pub fn fail(id: impl Into<String>, operands: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(id, operands, Some(witness.into()))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {} ({})", self.id, self.operands)?;
        match &self.witness {
            Some(w) => write!(f, " witness: {w}"),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    /// Records a check whose witness is the first failing item produced by `first_failure`.
    pub fn check(&mut self, id: &str, operands: &str, first_failure: Option<String>) {
        self.push(CheckResult::new(id, operands, first_failure));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn find(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Verdict of the named check; panics if absent.
    pub fn verdict(&self, id: &str) -> bool {
        self.find(id).unwrap_or_else(|| panic!("no check named {id}")).pass
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_status(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Machine => self.render_machine(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::from("gcenter report\n");
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{tag}] {} ({})", c.id, c.operands);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let _ = writeln!(out, "{} checks, {} passed, {} failed", self.len(), self.passed(), self.failed());
        out
    }

    fn render_machine(&self) -> String {
        let mut out = String::from("report version=1\n");
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "fail" };
            let witness = c.witness.as_deref().unwrap_or("-");
            let _ = writeln!(
                out,
                "check id={} operands={} verdict={verdict} witness={}",
                quote(&c.id),
                quote(&c.operands),
                quote(witness)
            );
        }
        let _ = writeln!(out, "summary total={} passed={} failed={}", self.len(), self.passed(), self.failed());
        let _ = writeln!(out, "status={}", if self.all_pass() { "pass" } else { "fail" });
        out
    }
}

/// Values containing whitespace, quotes or `=` are emitted as escaped quoted strings.
fn quote(s: &str) -> String {
    if !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '"' || c == '=') {
        return s.to_string();
    }
    format!("{s:?}")
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Diagram identifiers for coherence checks on concrete objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagramId {
    Hepta1,
    Hepta2,
    ActionBraid,
    CompositorCoherence,
    UnitCoherence,
    MonDiagram,
    CrossDiagram,
    RBraiding,
}

impl DiagramId {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagramId::Hepta1 => "hepta1",
            DiagramId::Hepta2 => "hepta2",
            DiagramId::ActionBraid => "action_braid",
            DiagramId::CompositorCoherence => "compositor_coherence",
            DiagramId::UnitCoherence => "unit_coherence",
            DiagramId::MonDiagram => "mon_diagram",
            DiagramId::CrossDiagram => "cross_diagram",
            DiagramId::RBraiding => "r_braiding",
        }
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub diagram: DiagramId,
    pub operands: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl DiagramReport {
    /// Compares the two composite paths of a diagram.
    pub fn compare(diagram: DiagramId, operands: impl Into<String>, lhs: &Mat, rhs: &Mat) -> Self {
        let witness = mat_witness(lhs, rhs);
        DiagramReport { diagram, operands: operands.into(), pass: witness.is_none(), witness }
    }

    pub fn to_check(&self) -> CheckResult {
        CheckResult::new(format!("diagram.{}", self.diagram), self.operands.clone(), self.witness.clone())
    }
}

impl From<DiagramReport> for CheckResult {
    fn from(d: DiagramReport) -> Self {
        d.to_check()
    }
}

/// Witness for the first differing entry of two matrices, or a shape mismatch.
pub fn mat_witness(lhs: &Mat, rhs: &Mat) -> Option<String> {
    if lhs.shape() != rhs.shape() {
        return Some(format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape()));
    }
    lhs.first_difference(rhs)
        .map(|(i, j)| format!("column {j} row {i}: {} vs {}", lhs.get(i, j), rhs.get(i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_formats() {
        let r = Report::new();
        assert_eq!(r.exit_status(), 0);
        assert_eq!(
            r.render(Format::Machine),
            "report version=1\nsummary total=0 passed=0 failed=0\nstatus=pass\n"
        );
        assert!(r.render(Format::Text).contains("0 checks"));
    }

    #[test]
    fn failing_report_has_witness_line() {
        let mut r = Report::new();
        r.push(CheckResult::pass("a", "x"));
        r.push(CheckResult::fail("b", "x y", "entry (1, 2)"));
        assert_eq!(r.exit_status(), 1);
        let m = r.render(Format::Machine);
        assert!(m.contains("check id=b operands=\"x y\" verdict=fail witness=\"entry (1, 2)\""));
        assert!(m.ends_with("status=fail\n"));
    }
}
