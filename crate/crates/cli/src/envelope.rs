//! The output document: one fixed envelope for every subcommand.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Cross-verification record of a run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossCheck {
    /// Whether any cross-check was applicable and executed.
    pub performed: bool,
    /// Outcome when performed (`null` otherwise).
    pub passed: Option<bool>,
    /// What was checked, or why nothing was.
    pub detail: String,
}

impl CrossCheck {
    /// A check that ran with the given outcome.
    pub fn done(passed: bool, detail: impl Into<String>) -> Self {
        CrossCheck { performed: true, passed: Some(passed), detail: detail.into() }
    }

    /// No applicable check for this invocation.
    pub fn skipped(detail: impl Into<String>) -> Self {
        CrossCheck { performed: false, passed: None, detail: detail.into() }
    }
}

/// The envelope every subcommand emits (canonical field order).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Document {
    /// Canonicalized semantic inputs (defaults filled in).
    pub inputs: Value,
    /// Human-readable description of the computation performed.
    pub method: String,
    /// Subcommand-specific results.
    pub values: Value,
    /// Cross-verification record.
    pub cross_check: CrossCheck,
    /// One of the closed verdict set (see the published schema).
    pub verdict: String,
}

/// Exit code implied by a verdict: `1` for computational mismatches,
/// `0` for everything else (including "non-injective"/"unknown", which
/// are correct results, not failures).
pub fn exit_code(verdict: &str) -> i32 {
    match verdict {
        "fail" | "mismatch" | "disagree" => 1,
        _ => 0,
    }
}

/// "pass"/"fail" from a cross-check (not-performed counts as pass: the
/// computation itself succeeded).
pub fn verdict_from(cross: &CrossCheck) -> String {
    match cross.passed {
        Some(false) => "fail".into(),
        _ => "pass".into(),
    }
}

/// Render a real number: exact integers print without a fractional part,
/// everything else trims to at most 9 decimals.
pub fn format_real(x: f64) -> String {
    let r = x.round();
    if (x - r).abs() < 5e-10 && r.abs() < 9e15 {
        return format!("{}", r as i64);
    }
    let mut s = format!("{x:.9}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    s
}

/// Render a complex number in `a+bi` form (`2+2i`, `-i`, `0`, …).
pub fn format_complex(z: Complex64) -> String {
    let re = format_real(z.re);
    let im = format_real(z.im);
    let coeff = |m: &str| if m == "1" { String::new() } else { m.to_string() };
    match (re.as_str(), im.as_str()) {
        ("0", "0") => "0".to_string(),
        (_, "0") => re,
        ("0", neg) if neg.starts_with('-') => format!("-{}i", coeff(&neg[1..])),
        ("0", _) => format!("{}i", coeff(&im)),
        (_, neg) if neg.starts_with('-') => format!("{re}-{}i", coeff(&neg[1..])),
        _ => format!("{re}+{}i", coeff(&im)),
    }
}

/// JSON record of a complex value: components plus display form.
pub fn json_complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im, "display": format_complex(z) })
}
