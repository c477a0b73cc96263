use serde::Serialize;

use crate::exact::Rational;
use crate::sampling::Resample;

/// Outcome of one exact identity check at one sample point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    pub point: Vec<Rational>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SampleCheck {
    pub fn pass(point: Vec<Rational>) -> Self {
        SampleCheck { point, passed: true, detail: None }
    }

    pub fn fail(point: Vec<Rational>, detail: impl Into<String>) -> Self {
        SampleCheck { point, passed: false, detail: Some(detail.into()) }
    }
}

/// Per-sample verdicts for one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub passed: bool,
    pub samples: Vec<SampleCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub resampled: Vec<Resample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn from_samples(identity: impl Into<String>, samples: Vec<SampleCheck>, resampled: Vec<Resample>) -> Self {
        let passed = samples.iter().all(|s| s.passed);
        CheckReport { identity: identity.into(), passed, samples, resampled, failures: Vec::new() }
    }

    /// A report for checks that do not depend on sample points.
    pub fn from_failures(identity: impl Into<String>, failures: Vec<String>) -> Self {
        CheckReport {
            identity: identity.into(),
            passed: failures.is_empty(),
            samples: Vec::new(),
            resampled: Vec::new(),
            failures,
        }
    }

    pub fn pass_count(&self) -> usize {
        self.samples.iter().filter(|s| s.passed).count()
    }
}
