//! Batch front end: case specifications, suite dispatch and report
//! emission.

mod emit;
mod suites;

use std::fmt;
use std::str::FromStr;

use dunkl_core::axial::ComplexSeed;
use dunkl_core::{DunklContext, ReflectionGroup, VerificationReport};

pub use emit::{emit, emit_json, emit_text, Format};
pub use suites::{basis_listing, ck_poly, fischer_poly, list_groups, run_suite};

/// Default limit on the total degree of the input to an iterated Laplacian.
pub const DEFAULT_MAX_DEGREE: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    #[value(name = "lemma21")]
    DiracPower,
    Commute,
    Gamma,
    #[value(name = "lemma32")]
    LaplacianPower,
    #[value(name = "fueter31")]
    AxialFueter,
    #[value(name = "fueter43")]
    ParavectorFueter,
    Fischer,
    Ck,
    ValidateGroup,
}

impl Suite {
    pub fn all() -> [Suite; 9] {
        [
            Suite::DiracPower,
            Suite::Commute,
            Suite::Gamma,
            Suite::LaplacianPower,
            Suite::AxialFueter,
            Suite::ParavectorFueter,
            Suite::Fischer,
            Suite::Ck,
            Suite::ValidateGroup,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::DiracPower => "lemma21",
            Suite::Commute => "commute",
            Suite::Gamma => "gamma",
            Suite::LaplacianPower => "lemma32",
            Suite::AxialFueter => "fueter31",
            Suite::ParavectorFueter => "fueter43",
            Suite::Fischer => "fischer",
            Suite::Ck => "ck",
            Suite::ValidateGroup => "validate-group",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::all()
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown suite `{s}`")))
    }
}

/// One requested run. Unset integers select the suite's default grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub suite: Suite,
    pub group: String,
    pub seed: Option<ComplexSeed>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub negative_control: bool,
    pub max_degree: u32,
    pub rand_seed: u64,
}

impl CaseSpec {
    pub fn new(suite: Suite, group: impl Into<String>) -> Self {
        CaseSpec {
            suite,
            group: group.into(),
            seed: None,
            m: None,
            n: None,
            k: None,
            negative_control: false,
            max_degree: DEFAULT_MAX_DEGREE,
            rand_seed: 0,
        }
    }

    pub fn context(&self) -> Result<DunklContext, CliError> {
        Ok(DunklContext::new(ReflectionGroup::from_spec(&self.group)?)?)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input degree {degree} exceeds --max-degree {limit} in case {case}")]
    DegreeBudget { case: String, degree: u32, limit: u32 },
    #[error(transparent)]
    Engine(#[from] dunkl_core::Error),
}

impl CliError {
    /// 2 for specification errors, 3 for internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(e) if e.is_internal() => 3,
            _ => 2,
        }
    }
}

/// Everything one invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRun {
    pub title: String,
    pub group: String,
    pub mu: String,
    pub rand_seed: u64,
    pub negative_control: bool,
    pub reports: Vec<VerificationReport>,
    /// Negative-control families that must each contain a failure.
    pub control_families: Vec<String>,
}

impl SuiteRun {
    pub fn summary(&self) -> (usize, usize) {
        self.reports.iter().fold((0, 0), |(p, f), r| {
            let (rp, rf) = r.summary();
            (p + rp, f + rf)
        })
    }

    /// Families with at least one failing check.
    pub fn families_with_failures(&self) -> Vec<&str> {
        self.control_families
            .iter()
            .filter(|fam| {
                self.reports
                    .iter()
                    .filter(|r| r.case_id.starts_with(fam.as_str()))
                    .any(|r| !r.passed())
            })
            .map(String::as_str)
            .collect()
    }

    pub fn succeeded(&self) -> bool {
        if self.negative_control {
            self.families_with_failures().len() == self.control_families.len()
        } else {
            self.summary().1 == 0
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.succeeded() {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_class() {
        let internal = CliError::Engine(dunkl_core::Error::NonDivisible { form: "x1".into() });
        assert_eq!(internal.exit_code(), 3);
        assert_eq!(CliError::Engine(dunkl_core::Error::NotHomogeneous).exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::all() {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn negative_control_needs_every_family_to_fail() {
        let mut failing = VerificationReport::new("a/x");
        failing.check("c", false, "1");
        let mut passing = VerificationReport::new("b/x");
        passing.check("c", true, "0");
        let mut run = SuiteRun {
            title: "t".into(),
            group: "g".into(),
            mu: "5".into(),
            rand_seed: 0,
            negative_control: true,
            reports: vec![failing, passing],
            control_families: vec!["a".into(), "b".into()],
        };
        assert_eq!(run.families_with_failures(), vec!["a"]);
        assert_eq!(run.exit_code(), 1);
        run.reports[1].check("d", false, "x1");
        assert_eq!(run.exit_code(), 0);
        run.negative_control = false;
        assert_eq!(run.exit_code(), 1);
    }
}
