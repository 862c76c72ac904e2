//! Structured outcomes of verification checks.

use std::fmt::Display;

/// Version string stamped into every report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    /// The residual in the polynomial text format (`0` when the identity
    /// holds), or a short description for non-polynomial checks.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub case_id: String,
    pub checks: Vec<CheckEntry>,
    pub notes: Vec<String>,
    pub engine_version: String,
    pub rand_seed: Option<u64>,
}

impl VerificationReport {
    pub fn new(case_id: impl Into<String>) -> Self {
        VerificationReport {
            case_id: case_id.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            engine_version: ENGINE_VERSION.to_string(),
            rand_seed: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, residual: impl Display) {
        self.checks.push(CheckEntry {
            name: name.into(),
            passed,
            residual: residual.to_string(),
        });
    }

    /// Records an identity whose residual should be the zero polynomial.
    pub fn check_zero<T: Display>(&mut self, name: impl Into<String>, residual: &T, is_zero: bool) {
        self.check(name, is_zero, residual);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `(passed, failed)` tallies.
    pub fn summary(&self) -> (usize, usize) {
        let pass = self.checks.iter().filter(|c| c.passed).count();
        (pass, self.checks.len() - pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tallies_follow_entries() {
        let mut r = VerificationReport::new("case");
        r.check("a", true, "0");
        r.check("b", false, "1*x1");
        assert_eq!(r.summary(), (1, 1));
        assert!(!r.passed());
        let mut outer = VerificationReport::new("outer");
        outer.absorb("inner/", r);
        assert_eq!(outer.checks[1].name, "inner/b");
        assert_eq!(outer.failures().count(), 1);
    }
}
