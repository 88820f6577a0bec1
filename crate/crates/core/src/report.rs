use serde::Serialize;

/// One named pass/fail check with a human-readable detail line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            check: check.into(),
            pass,
            detail: detail.into(),
        }
    }
}
