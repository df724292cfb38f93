//! Deterministic machine-readable reports: every numeric value carries its
//! minimal polynomial and isolating interval, never a bare decimal, so
//! downstream comparisons stay exact.

use crate::algnum::RealAlgebraic;
use crate::rat::format_rational;
use crate::ring::Violation;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An exact value: primitive minimal polynomial (pretty form plus raw
/// integer coefficients, low degree first), isolating interval, and a
/// certified decimal approximation.
#[derive(Debug, Clone, Serialize)]
pub struct ExactValue {
    pub minpoly: String,
    pub minpoly_coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[String; 2]>,
    pub decimal: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, ExactValue>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
}

impl Report {
    pub fn new(command: &str, inputs: &[&[u8]]) -> Self {
        let mut hasher = Sha256::new();
        for chunk in inputs {
            hasher.update(chunk);
        }
        Report {
            command: command.to_string(),
            inputs_digest: hex_prefix(&hasher.finalize()),
            findings: Vec::new(),
            values: BTreeMap::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn add_finding(&mut self, severity: Severity, code: &str, message: String, witness: Option<String>) {
        self.findings.push(Finding {
            severity,
            code: code.to_string(),
            message,
            witness,
        });
    }

    pub fn add_violations(&mut self, violations: &[Violation]) {
        for v in violations {
            self.add_finding(
                Severity::Error,
                &v.code,
                v.message.clone(),
                Some(format!("{:?}", v.witness)),
            );
        }
    }

    pub fn add_value(&mut self, name: &str, v: &RealAlgebraic, digits: u32) {
        self.values.insert(name.to_string(), exact_value(v, digits));
    }

    pub fn add_data(&mut self, name: &str, value: serde_json::Value) {
        self.data.insert(name.to_string(), value);
    }

    pub fn has_errors(&self) -> bool {
        self.findings.iter().any(|f| f.severity == Severity::Error)
    }

    /// Byte-stable rendering: findings sorted by (severity, code), maps are
    /// ordered, no floating point.
    pub fn render(&mut self) -> String {
        self.findings
            .sort_by(|a, b| (a.severity, &a.code).cmp(&(b.severity, &b.code)));
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn print_verbose(&self) {
        for f in &self.findings {
            eprintln!(
                "[{:?}] {}: {}{}",
                f.severity,
                f.code,
                f.message,
                f.witness
                    .as_ref()
                    .map(|w| format!(" (witness {w})"))
                    .unwrap_or_default()
            );
        }
    }
}

fn hex_prefix(bytes: &[u8]) -> String {
    bytes[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn exact_value(v: &RealAlgebraic, digits: u32) -> ExactValue {
    let decimal = v.decimal(digits);
    let (lo, hi) = v.interval();
    ExactValue {
        minpoly: v.minpoly().to_string_pretty(),
        minpoly_coefficients: v.minpoly().0.iter().map(|c| c.to_string()).collect(),
        interval: if v.is_rational() {
            None
        } else {
            Some([format_rational(&lo), format_rational(&hi)])
        },
        decimal,
    }
}

/// Renders an algebraic number as "{minpoly; [lo, hi]; \u{2248} d.ddd}" with the
/// approximation certified to the requested digits; rational values omit
/// the interval.
pub fn render_algebraic(v: &RealAlgebraic, digits: u32) -> String {
    assert!(digits >= 1);
    let decimal = v.decimal(digits);
    if v.is_rational() {
        format!("{}; \u{2248} {}", v.minpoly().to_string_pretty(), decimal)
    } else {
        let (lo, hi) = v.interval();
        format!(
            "{}; [{}, {}]; \u{2248} {}",
            v.minpoly().to_string_pretty(),
            format_rational(&lo),
            format_rational(&hi),
            decimal
        )
    }
}
