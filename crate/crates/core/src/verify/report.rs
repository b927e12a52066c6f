//! Structured check cases and reports, with JSON / CSV / table emission.

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::QuadConfig;

pub type Complex64 = Complex<f64>;

/// One verified identity instance.
#[derive(Debug, Clone)]
pub struct CheckCase {
    pub suite: &'static str,
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// Documents an expected failure (e.g. a known table misprint); such
    /// cases still count in `n_fail` but do not affect exit status.
    pub informational: bool,
}

fn finite_or_zero(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        0.0
    }
}

impl CheckCase {
    /// Compares `lhs` against `rhs` under the mixed absolute/relative rule
    /// `abs_err <= tol * (1 + max(|lhs|, |rhs|))`.
    pub fn compare(
        suite: &'static str,
        name: impl Into<String>,
        params: BTreeMap<String, f64>,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let finite = abs_err.is_finite() && scale.is_finite();
        let rel_err = if !finite {
            f64::MAX
        } else if scale > 0.0 {
            abs_err / scale
        } else {
            0.0
        };
        CheckCase {
            suite,
            name: name.into(),
            params,
            lhs: Complex64::new(finite_or_zero(lhs.re), finite_or_zero(lhs.im)),
            rhs: Complex64::new(finite_or_zero(rhs.re), finite_or_zero(rhs.im)),
            abs_err: if finite { abs_err } else { f64::MAX },
            rel_err,
            tol,
            pass: finite && abs_err <= tol * (1.0 + scale),
            informational: false,
        }
    }

    /// Real-valued convenience wrapper around [`CheckCase::compare`].
    pub fn compare_real(
        suite: &'static str,
        name: impl Into<String>,
        params: BTreeMap<String, f64>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        CheckCase::compare(
            suite,
            name,
            params,
            Complex64::new(lhs, 0.0),
            Complex64::new(rhs, 0.0),
            tol,
        )
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Outcome of a verification suite.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub tol: f64,
    pub config: QuadConfig<f64>,
    pub created_at: String,
    pub cases: Vec<CheckCase>,
}

impl Report {
    pub fn new(
        suite: impl Into<String>,
        tol: f64,
        config: QuadConfig<f64>,
        cases: Vec<CheckCase>,
    ) -> Self {
        Report {
            suite: suite.into(),
            tol,
            config,
            created_at: chrono::Utc::now().to_rfc3339(),
            cases,
        }
    }

    pub fn n_pass(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn n_fail(&self) -> usize {
        self.cases.len() - self.n_pass()
    }

    /// Failures that are not documented expected failures.
    pub fn unexpected_failures(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| !c.pass && !c.informational)
            .count()
    }
}

/// Output encodings for [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Table,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            other => Err(Error::Precondition(format!(
                "unknown format `{other}` (expected json, csv or table)"
            ))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct ConfigJson {
    rel_tol: f64,
    abs_tol: f64,
    max_subdivisions: usize,
    truncation_decades: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct CaseJson {
    name: String,
    params: BTreeMap<String, f64>,
    lhs: [f64; 2],
    rhs: [f64; 2],
    abs_err: f64,
    rel_err: f64,
    pass: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub(crate) struct ReportJson {
    suite: String,
    tol: f64,
    config: ConfigJson,
    created_at: String,
    n_pass: usize,
    n_fail: usize,
    cases: Vec<CaseJson>,
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> Self {
        ReportJson {
            suite: r.suite.clone(),
            tol: r.tol,
            config: ConfigJson {
                rel_tol: r.config.rel_tol,
                abs_tol: r.config.abs_tol,
                max_subdivisions: r.config.max_subdivisions,
                truncation_decades: r.config.truncation_decades,
            },
            created_at: r.created_at.clone(),
            n_pass: r.n_pass(),
            n_fail: r.n_fail(),
            cases: r
                .cases
                .iter()
                .map(|c| CaseJson {
                    name: c.name.clone(),
                    params: c.params.clone(),
                    lhs: [c.lhs.re, c.lhs.im],
                    rhs: [c.rhs.re, c.rhs.im],
                    abs_err: c.abs_err,
                    rel_err: c.rel_err,
                    pass: c.pass,
                })
                .collect(),
        }
    }
}

/// Formats a number with 12 significant digits (for the human-facing
/// CSV/table encodings; JSON keeps full precision for lossless round trips).
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Serializes a report. JSON follows the stable schema
/// `{suite, tol, config, created_at, n_pass, n_fail, cases[]}`.
pub fn emit_report(r: &Report, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(&ReportJson::from(r))
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| Error::Precondition(format!("JSON encoding failed: {e}"))),
        ReportFormat::Csv => Ok(to_csv(r)),
        ReportFormat::Table => Ok(to_table(r)),
    }
}

fn param_keys(r: &Report) -> Vec<String> {
    let mut keys: Vec<String> = Vec::new();
    for c in &r.cases {
        for k in c.params.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    keys.sort();
    keys
}

fn to_csv(r: &Report) -> String {
    let keys = param_keys(r);
    let mut out = String::from("name");
    for k in &keys {
        out.push(',');
        out.push_str(k);
    }
    out.push_str(",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n");
    for c in &r.cases {
        out.push_str(&c.name);
        for k in &keys {
            out.push(',');
            if let Some(v) = c.params.get(k) {
                out.push_str(&fmt12(*v));
            }
        }
        for v in [c.lhs.re, c.lhs.im, c.rhs.re, c.rhs.im, c.abs_err, c.rel_err] {
            out.push(',');
            out.push_str(&fmt12(v));
        }
        out.push(',');
        out.push_str(if c.pass { "true" } else { "false" });
        out.push('\n');
    }
    out
}

fn to_table(r: &Report) -> String {
    let name_w = r
        .cases
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let mut out = format!(
        "suite: {}  (tol {}, {} pass / {} fail)\n",
        r.suite,
        r.tol,
        r.n_pass(),
        r.n_fail()
    );
    out.push_str(&format!(
        "{:<name_w$}  {:>19} {:>19} {:>12}  {}\n",
        "name", "lhs", "rhs", "abs_err", "pass"
    ));
    for c in &r.cases {
        let fmt_c = |z: Complex64| {
            if z.im == 0.0 {
                fmt12(z.re)
            } else {
                format!("{}{:+.5e}i", fmt12(z.re), z.im)
            }
        };
        out.push_str(&format!(
            "{:<name_w$}  {:>19} {:>19} {:>12}  {}\n",
            c.name,
            fmt_c(c.lhs),
            fmt_c(c.rhs),
            format!("{:.3e}", c.abs_err),
            if c.pass {
                "pass"
            } else if c.informational {
                "FAIL (informational)"
            } else {
                "FAIL"
            }
        ));
    }
    out
}

/// Parses a JSON report back into its schema form (used to validate the
/// round-trip contract).
pub(crate) fn parse_report_json(s: &str) -> Result<ReportJson> {
    serde_json::from_str(s).map_err(|e| Error::Precondition(format!("JSON decoding failed: {e}")))
}

/// Validates that a byte string is a well-formed JSON report: it must parse
/// against the schema, satisfy `n_pass + n_fail = cases.len()`, and survive
/// a decode/encode round trip byte-identically.
pub fn validate_report_json(s: &str) -> Result<()> {
    let parsed = parse_report_json(s)?;
    if parsed.n_pass + parsed.n_fail != parsed.cases.len() {
        return Err(Error::Precondition(format!(
            "report counts are inconsistent: {} + {} != {}",
            parsed.n_pass,
            parsed.n_fail,
            parsed.cases.len()
        )));
    }
    let reencoded = serde_json::to_string_pretty(&parsed)
        .map_err(|e| Error::Precondition(format!("JSON encoding failed: {e}")))?
        + "\n";
    if reencoded != s {
        return Err(Error::Precondition(
            "report JSON does not round-trip losslessly".to_string(),
        ));
    }
    Ok(())
}
