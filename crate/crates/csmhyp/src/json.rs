//! JSON forms of classes, reports and trial logs.
//!
//! Classes are codimension-indexed arrays of rational strings (`"3"`,
//! `"-1/2"`). Field order is fixed, so a report serializes to the same bytes
//! every time.

use std::str::FromStr;

use csmhyp_core::charclasses::{ClassReport, VerificationRecord};
use csmhyp_core::segreengine::TrialRecord;
use csmhyp_core::ChowClass;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn class_to_strings(c: &ChowClass) -> Vec<String> {
    c.coeffs().iter().map(ToString::to_string).collect()
}

/// A coefficient written either as a JSON integer or as a rational string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn to_rational(&self) -> Result<BigRational, CliError> {
        match self {
            Coeff::Int(v) => Ok(BigRational::from_integer((*v).into())),
            Coeff::Text(s) => BigRational::from_str(s.trim())
                .map_err(|_| CliError::Input(format!("not a rational number: {s:?}"))),
        }
    }
}

pub fn class_from_coeffs(n: usize, coeffs: &[Coeff]) -> Result<ChowClass, CliError> {
    let values = coeffs.iter().map(Coeff::to_rational).collect::<Result<Vec<_>, _>>()?;
    ChowClass::new(n, values).map_err(|e| CliError::Input(format!("bad class for n = {n}: {e}")))
}

pub fn class_from_strings(n: usize, coeffs: &[String]) -> Result<ChowClass, CliError> {
    let owned: Vec<Coeff> = coeffs.iter().cloned().map(Coeff::Text).collect();
    class_from_coeffs(n, &owned)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialJson {
    pub prime: u64,
    pub seed: u64,
    pub g: Vec<u64>,
    pub accepted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl From<&TrialRecord> for TrialJson {
    fn from(r: &TrialRecord) -> Self {
        TrialJson { prime: r.prime, seed: r.seed, g: r.g.clone(), accepted: r.accepted, failure: r.failure.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&VerificationRecord> for VerificationJson {
    fn from(v: &VerificationRecord) -> Self {
        VerificationJson {
            name: v.name.clone(),
            pass: v.pass,
            difference: v.difference.as_ref().map(class_to_strings),
            detail: v.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub d: u32,
    pub projective_degrees: Option<Vec<u64>>,
    pub segre_singular: Vec<String>,
    pub s_x_minus_y: Vec<String>,
    pub csm: Vec<String>,
    pub fulton: Vec<String>,
    pub mu: Vec<String>,
    pub euler: i64,
    pub milnor_total: i64,
    pub verification: Vec<VerificationJson>,
    pub trials: Vec<TrialJson>,
}

impl From<&ClassReport> for ReportJson {
    fn from(r: &ClassReport) -> Self {
        let c = &r.classes;
        ReportJson {
            n: r.n(),
            d: r.d(),
            projective_degrees: r.projective_degrees.clone(),
            segre_singular: class_to_strings(&c.segre_singular),
            s_x_minus_y: class_to_strings(&c.s_x_minus_y),
            csm: class_to_strings(&c.csm),
            fulton: class_to_strings(&c.fulton),
            mu: class_to_strings(&c.mu),
            euler: r.euler,
            milnor_total: r.milnor_total,
            verification: r.verification.iter().map(VerificationJson::from).collect(),
            trials: r.trials.iter().map(TrialJson::from).collect(),
        }
    }
}

/// The class fields of a parsed report, in the order
/// `segre_singular, s_x_minus_y, csm, fulton, mu`.
impl ReportJson {
    pub fn classes(&self) -> Result<[ChowClass; 5], CliError> {
        let f = |v: &Vec<String>| class_from_strings(self.n, v);
        Ok([f(&self.segre_singular)?, f(&self.s_x_minus_y)?, f(&self.csm)?, f(&self.fulton)?, f(&self.mu)?])
    }
}

pub fn report_to_json(r: &ClassReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("report serializes")
}

/// Machine-readable failure, carrying the trial log when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub error: String,
    pub kind: String,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trials: Vec<TrialJson>,
}
