//! Structured pass/fail records for relation sweeps.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exact::ExactMatrix;

/// One violated relation: the identifying indices of the check plus,
/// for the first few violations of a sweep, the left-minus-right
/// difference matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub diff: Option<ExactMatrix>,
}

/// Outcome of an exhaustive relation sweep. `checked` is the full
/// enumeration size; the sweep passes exactly when no violation was
/// found. Difference matrices are kept for at most
/// [`VerificationReport::DIFF_DETAIL_LIMIT`] violations; the rest are
/// reported by indices only.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub subject: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub const DIFF_DETAIL_LIMIT: usize = 10;

    /// Sorts violations by indices and drops difference matrices past
    /// the detail limit.
    pub fn new(subject: impl Into<String>, checked: usize, mut violations: Vec<Violation>) -> Self {
        violations.sort_by(|a, b| a.indices.cmp(&b.indices));
        for v in violations.iter_mut().skip(Self::DIFF_DETAIL_LIMIT) {
            v.diff = None;
        }
        VerificationReport {
            subject: subject.into(),
            checked,
            violations,
        }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VerificationReport", 4)?;
        s.serialize_field("subject", &self.subject)?;
        s.serialize_field("checked", &self.checked)?;
        s.serialize_field("violations", &self.violations)?;
        s.serialize_field("pass", &self.pass())?;
        s.end()
    }
}
