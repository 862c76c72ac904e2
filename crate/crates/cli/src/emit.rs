use serde::Serialize;

use crate::SuiteRun;
use dunkl_core::ENGINE_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit(run: &SuiteRun, format: Format) -> String {
    match format {
        Format::Text => emit_text(run),
        Format::Json => emit_json(run),
    }
}

/// One `CASE … CHECK …` line per check, then notes and the summary.
pub fn emit_text(run: &SuiteRun) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# {} group={} mu={} rand_seed={} engine={}\n",
        run.title, run.group, run.mu, run.rand_seed, ENGINE_VERSION
    ));
    for r in &run.reports {
        for c in &r.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "CASE {} CHECK {} {verdict} residual={}\n",
                r.case_id, c.name, c.residual
            ));
        }
        for n in &r.notes {
            out.push_str(&format!("NOTE {} {n}\n", r.case_id));
        }
    }
    let (pass, fail) = run.summary();
    if run.negative_control {
        let found = run.families_with_failures();
        for fam in &run.control_families {
            let state = if found.contains(&fam.as_str()) {
                "nonzero residual found"
            } else {
                "no nonzero residual"
            };
            out.push_str(&format!("negative-control {fam}: {state}\n"));
        }
    }
    out.push_str(&format!("summary: {{pass: {pass}, fail: {fail}}}\n"));
    out
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    passed: bool,
    residual: &'a str,
}

#[derive(Serialize)]
struct JsonCase<'a> {
    case_id: &'a str,
    checks: Vec<JsonCheck<'a>>,
    notes: &'a [String],
}

#[derive(Serialize)]
struct JsonSummary {
    pass: usize,
    fail: usize,
}

#[derive(Serialize)]
struct JsonControl<'a> {
    family: &'a str,
    nonzero_residual_found: bool,
}

#[derive(Serialize)]
struct JsonRun<'a> {
    schema: u32,
    engine_version: &'a str,
    suite: &'a str,
    group: &'a str,
    mu: &'a str,
    rand_seed: u64,
    negative_control: bool,
    cases: Vec<JsonCase<'a>>,
    controls: Vec<JsonControl<'a>>,
    summary: JsonSummary,
    succeeded: bool,
}

/// Single JSON document; field order is fixed and rationals are strings.
pub fn emit_json(run: &SuiteRun) -> String {
    let found = run.families_with_failures();
    let (pass, fail) = run.summary();
    let doc = JsonRun {
        schema: 1,
        engine_version: ENGINE_VERSION,
        suite: &run.title,
        group: &run.group,
        mu: &run.mu,
        rand_seed: run.rand_seed,
        negative_control: run.negative_control,
        cases: run
            .reports
            .iter()
            .map(|r| JsonCase {
                case_id: &r.case_id,
                checks: r
                    .checks
                    .iter()
                    .map(|c| JsonCheck {
                        name: &c.name,
                        passed: c.passed,
                        residual: &c.residual,
                    })
                    .collect(),
                notes: &r.notes,
            })
            .collect(),
        controls: run
            .control_families
            .iter()
            .map(|f| JsonControl {
                family: f,
                nonzero_residual_found: found.contains(&f.as_str()),
            })
            .collect(),
        summary: JsonSummary { pass, fail },
        succeeded: run.succeeded(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}
