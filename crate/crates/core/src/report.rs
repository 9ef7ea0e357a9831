//! Structured results of the verification suites and their serialized forms.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Version of the JSON report schema; evolves additively.
pub const SCHEMA_VERSION: u32 = 1;

/// Which suites to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteSelection {
    Geometry,
    Connections,
    Statmech,
    Heisenberg,
    All,
}

impl SuiteSelection {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "geometry" => Ok(SuiteSelection::Geometry),
            "connections" => Ok(SuiteSelection::Connections),
            "statmech" => Ok(SuiteSelection::Statmech),
            "heisenberg" => Ok(SuiteSelection::Heisenberg),
            "all" => Ok(SuiteSelection::All),
            other => Err(Error::Config(format!(
                "unknown suite '{other}' (geometry, connections, statmech, heisenberg, all)"
            ))),
        }
    }

    pub fn includes(&self, other: SuiteSelection) -> bool {
        *self == SuiteSelection::All || *self == other
    }
}

/// Configuration of a suite run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: SuiteSelection,
    pub n_values: Vec<usize>,
    pub points: usize,
    pub seed: u64,
    pub tol_closed: f64,
    pub tol_fd: f64,
    pub models: Vec<String>,
    /// Worker-pool size; 0 selects the available parallelism.
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteSelection::All,
            n_values: vec![1, 2, 3],
            points: 100,
            seed: 42,
            tol_closed: 1e-8,
            tol_fd: 1e-6,
            models: crate::statmech::BUILT_IN_MODELS
                .iter()
                .map(|s| s.to_string())
                .collect(),
            workers: 0,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.n_values.contains(&0) {
            return Err(Error::Config(
                "n values must be present and at least 1".into(),
            ));
        }
        if self.points == 0 {
            return Err(Error::Config("points must be at least 1".into()));
        }
        if !(self.tol_closed > 0.0) || !(self.tol_fd > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        for name in &self.models {
            if crate::statmech::by_name::<f64>(name).is_none() {
                return Err(Error::Config(format!("unknown model '{name}'")));
            }
        }
        Ok(())
    }
}

/// Outcome of a single identity check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    /// Unique id within the report, e.g. `connections.canonical_flatness.n2`.
    pub id: String,
    /// The identity the check verifies, in plain notation.
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Number of sampled points or grid nodes exercised.
    pub points: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Reported constants (fitted coefficients, realized signs, ...).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, f64>,
}

impl CheckResult {
    pub fn new(
        id: impl Into<String>,
        identity: impl Into<String>,
        n: Option<usize>,
        points: usize,
        max_residual: f64,
        tolerance: f64,
    ) -> Self {
        CheckResult {
            id: id.into(),
            identity: identity.into(),
            n,
            points,
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
            constants: BTreeMap::new(),
        }
    }

    pub fn with_constant(mut self, key: &str, value: f64) -> Self {
        self.constants.insert(key.to_string(), value);
        self
    }
}

/// Tallies of a report's checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// A full suite run: configuration echo, per-check results, tallies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub duration_seconds: f64,
}

impl Report {
    pub fn new(config: SuiteConfig, checks: Vec<CheckResult>, duration_seconds: f64) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        };
        Report {
            schema_version: SCHEMA_VERSION,
            config,
            checks,
            summary,
            duration_seconds,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Output encodings of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

impl ReportFormat {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::Config(format!(
                "unknown format '{other}' (json, text)"
            ))),
        }
    }
}

/// Serializes a report; the JSON form round-trips through
/// [`parse_report_json`].
pub fn serialize_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serialization cannot fail")
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let id_width = report
                .checks
                .iter()
                .map(|c| c.id.len())
                .max()
                .unwrap_or(8)
                .max("check".len());
            out.push_str(&format!(
                "{:<id_width$}  {:>2}  {:>12}  {:>9}  {:<6}  identity\n",
                "check", "n", "residual", "tol", "status"
            ));
            for check in &report.checks {
                let n = check.n.map_or(String::from("-"), |n| n.to_string());
                let mut line = format!(
                    "{:<id_width$}  {:>2}  {:>12.3e}  {:>9.1e}  {:<6}  {}",
                    check.id,
                    n,
                    check.max_residual,
                    check.tolerance,
                    if check.pass { "pass" } else { "FAIL" },
                    check.identity,
                );
                if !check.constants.is_empty() {
                    let consts: Vec<String> = check
                        .constants
                        .iter()
                        .map(|(k, v)| format!("{k} = {v:.6}"))
                        .collect();
                    line.push_str(&format!("  [{}]", consts.join(", ")));
                }
                line.push('\n');
                out.push_str(&line);
            }
            out.push_str(&format!(
                "\n{} checks: {} passed, {} failed ({:.2}s)\n",
                report.summary.total,
                report.summary.passed,
                report.summary.failed,
                report.duration_seconds
            ));
            out
        }
    }
}

/// Parses the JSON form back into a report.
pub fn parse_report_json(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("bad report JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> Report {
        let checks = vec![
            CheckResult::new("a.first", "eta(xi) = 1", Some(1), 10, 1e-12, 1e-8),
            CheckResult::new(
                "a.second",
                "Ric = lambda eta(x)eta + nu G",
                Some(2),
                10,
                2e-7,
                1e-6,
            )
            .with_constant("lambda", -6.0)
            .with_constant("nu", 2.0),
        ];
        Report::new(SuiteConfig::default(), checks, 0.25)
    }

    #[test]
    fn json_round_trip() {
        let report = sample_report();
        let json = serialize_report(&report, ReportFormat::Json);
        let back = parse_report_json(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn empty_report_is_valid() {
        let report = Report::new(SuiteConfig::default(), Vec::new(), 0.0);
        let json = serialize_report(&report, ReportFormat::Json);
        let back = parse_report_json(&json).unwrap();
        assert_eq!(back.summary.total, 0);
        assert!(back.all_passed());
    }

    #[test]
    fn pass_flag_follows_tolerance() {
        let ok = CheckResult::new("x", "y", None, 1, 1e-9, 1e-8);
        assert!(ok.pass);
        let bad = CheckResult::new("x", "y", None, 1, 1e-7, 1e-8);
        assert!(!bad.pass);
    }

    #[test]
    fn text_form_mentions_failures() {
        let mut report = sample_report();
        report.checks[0].pass = false;
        let text = serialize_report(&report, ReportFormat::Text);
        assert!(text.contains("FAIL"));
        assert!(text.contains("lambda"));
    }

    #[test]
    fn config_validation() {
        let mut config = SuiteConfig::default();
        assert!(config.validate().is_ok());
        config.points = 0;
        assert!(config.validate().is_err());
        config.points = 10;
        config.models = vec!["no_such_model".into()];
        assert!(config.validate().is_err());
    }
}
