//! Fixture corpus: polynomials with independently known invariants, and the
//! runner that checks the pipeline against them.

use std::fmt::Write;
use std::path::Path;

use csmhyp_core::charclasses::{
    analyze, csm_normal_crossings, csm_smooth_singularity, reduced_invariance_check, segre_singular_nc,
    ClassReport, HypersurfaceInput,
};
use csmhyp_core::oracles::{affine_milnor_total, smooth_chern_class, MilnorCount};
use csmhyp_core::polyalg::parse_poly;
use csmhyp_core::segreengine::TrialPolicy;
use csmhyp_core::ChowClass;
use serde::{Deserialize, Serialize};

use crate::json::{class_from_coeffs, Coeff};
use crate::CliError;

pub const DEFAULT_CORPUS: &str = include_str!("../fixtures/default.json");

/// Any subset of report fields, as expected values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projective_degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre_singular: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_x_minus_y: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csm: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fulton: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_total: Option<i64>,
}

/// `c(TY) ∩ [Y]` for a smooth singular locus, pushed to `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmoothLocus {
    pub chern: Vec<Coeff>,
    pub codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureCase {
    pub name: String,
    pub polynomial: String,
    /// Ambient dimension; the polynomial lives in `x0..x{n}`.
    pub n: usize,
    #[serde(default)]
    pub expected: ExpectedReport,
    /// Affine chart for the Milnor-number oracle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<usize>,
    /// Squarefree part, when the polynomial is not reduced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth_singular_locus: Option<SmoothLocus>,
    /// Component degrees, when `X` is a normal-crossings union.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_crossings: Option<Vec<u32>>,
    pub provenance: String,
}

pub fn parse_corpus(text: &str) -> Result<Vec<FixtureCase>, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad fixture file: {e}")))
}

pub fn load_corpus(path: &Path) -> Result<Vec<FixtureCase>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read fixture file {}: {e}", path.display())))?;
    parse_corpus(&text)
}

pub fn default_corpus() -> Vec<FixtureCase> {
    parse_corpus(DEFAULT_CORPUS).expect("bundled corpus parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: Option<String>) -> Self {
        Check { name: name.into(), pass, detail }
    }

    fn classes(name: &str, got: &ChowClass, want: &ChowClass) -> Self {
        let pass = got == want;
        Check::new(name, pass, (!pass).then(|| format!("got {got}, expected {want}")))
    }

    fn values<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Self {
        let pass = got == want;
        Check::new(name, pass, (!pass).then(|| format!("got {got:?}, expected {want:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub name: String,
    pub checks: Vec<Check>,
    pub error: Option<String>,
    pub report: Option<ClassReport>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }
}

fn expected_class(
    checks: &mut Vec<Check>,
    name: &str,
    n: usize,
    want: &Option<Vec<Coeff>>,
    got: &ChowClass,
) -> Result<(), CliError> {
    if let Some(w) = want {
        checks.push(Check::classes(&format!("expected.{name}"), got, &class_from_coeffs(n, w)?));
    }
    Ok(())
}

fn run_checks(case: &FixtureCase, policy: &TrialPolicy, checks: &mut Vec<Check>) -> Result<ClassReport, CliError> {
    let nvars = case.n + 1;
    let f = parse_poly(&case.polynomial, nvars)?;
    let report = analyze(&f, policy)?;
    let c = &report.classes;
    let n = case.n;

    for v in &report.verification {
        checks.push(Check::new(v.name.clone(), v.pass, v.difference.as_ref().map(|d| format!("difference {d}"))));
    }

    let e = &case.expected;
    if let Some(g) = &e.projective_degrees {
        checks.push(Check::values("expected.projective_degrees", report.projective_degrees.as_ref(), Some(g)));
    }
    expected_class(checks, "segre_singular", n, &e.segre_singular, &c.segre_singular)?;
    expected_class(checks, "s_x_minus_y", n, &e.s_x_minus_y, &c.s_x_minus_y)?;
    expected_class(checks, "csm", n, &e.csm, &c.csm)?;
    expected_class(checks, "fulton", n, &e.fulton, &c.fulton)?;
    expected_class(checks, "mu", n, &e.mu, &c.mu)?;
    if let Some(x) = e.euler {
        checks.push(Check::values("expected.euler", report.euler, x));
    }
    if let Some(m) = e.milnor_total {
        checks.push(Check::values("expected.milnor_total", report.milnor_total, m));
    }

    if c.segre_singular.is_zero() {
        let closed = smooth_chern_class(n, report.d());
        let pass = c.csm == closed && c.fulton == closed;
        checks.push(Check::new("smooth_closed_form", pass, (!pass).then(|| format!("closed form {closed}"))));
    }
    if let Some(chart) = case.chart {
        match affine_milnor_total(&f, chart, &policy.primes)? {
            MilnorCount::Finite(m) => checks.push(Check::values("milnor_oracle", report.milnor_total, m as i64)),
            MilnorCount::NonIsolated => {
                checks.push(Check::new("milnor_oracle", false, Some("singularities are not isolated".into())))
            }
        }
    }
    if let Some(red) = &case.reduced {
        let g = parse_poly(red, nvars)?;
        let rec = reduced_invariance_check(&f, &g, policy)?;
        checks.push(Check::new(rec.name, rec.pass, rec.difference.map(|d| format!("difference {d}"))));
    }
    if let Some(locus) = &case.smooth_singular_locus {
        let inp = HypersurfaceInput::new(n, report.d(), c.segre_singular.clone())?;
        let cty = class_from_coeffs(n, &locus.chern)?;
        let shortcut = csm_smooth_singularity(&inp, &cty, locus.codim)?;
        checks.push(Check::classes("smooth_singularity_shortcut", &shortcut, &c.csm));
    }
    if let Some(degrees) = &case.normal_crossings {
        checks.push(Check::classes("normal_crossings_csm", &c.csm, &csm_normal_crossings(n, degrees)?));
        checks.push(Check::classes("normal_crossings_segre", &c.segre_singular, &segre_singular_nc(n, degrees)?));
    }
    Ok(report)
}

pub fn run_fixture(case: &FixtureCase, policy: &TrialPolicy) -> FixtureOutcome {
    let mut checks = Vec::new();
    match run_checks(case, policy, &mut checks) {
        Ok(report) => FixtureOutcome { name: case.name.clone(), checks, error: None, report: Some(report) },
        Err(e) => FixtureOutcome { name: case.name.clone(), checks, error: Some(e.to_string()), report: None },
    }
}

#[derive(Clone, Debug)]
pub struct SuiteSummary {
    pub outcomes: Vec<FixtureOutcome>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(FixtureOutcome::passed)
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed()).count()
    }

    /// One line per fixture with its checks, then failure details.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self.outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let marks: Vec<String> =
                o.checks.iter().map(|c| format!("{}:{}", c.name, if c.pass { "ok" } else { "FAIL" })).collect();
            writeln!(out, "{status} {:<width$}  {}", o.name, marks.join(" ")).unwrap();
            if let Some(e) = &o.error {
                writeln!(out, "     error: {e}").unwrap();
            }
            for c in o.checks.iter().filter(|c| !c.pass) {
                if let Some(d) = &c.detail {
                    writeln!(out, "     {}: {d}", c.name).unwrap();
                }
            }
        }
        writeln!(out, "{} fixtures, {} failed", self.outcomes.len(), self.failures()).unwrap();
        out
    }
}

/// Runs every fixture, in parallel, keeping corpus order in the summary.
pub fn run_suite(cases: &[FixtureCase], policy: &TrialPolicy) -> SuiteSummary {
    let outcomes = std::thread::scope(|s| {
        let handles: Vec<_> = cases.iter().map(|c| s.spawn(move || run_fixture(c, policy))).collect();
        handles.into_iter().map(|h| h.join().expect("fixture thread panicked")).collect()
    });
    SuiteSummary { outcomes }
}
