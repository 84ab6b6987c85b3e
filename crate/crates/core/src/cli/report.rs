//! Verification reports and the three output formats.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::arith::{BigFloat, Rational};
use crate::padic::PadicValuation;

/// One checked identity instance.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Case {
    pub id: String,
    pub description: String,
    pub lhs: String,
    pub rhs: String,
    /// `"exact"` or a decimal magnitude.
    pub residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    pub pass: bool,
    /// Library operations the case exercises.
    #[serde(skip)]
    pub ops: Vec<&'static str>,
}

impl Case {
    pub fn new(id: String, description: impl Into<String>, ops: &[&'static str]) -> CaseBuilder {
        CaseBuilder { id, description: description.into(), ops: ops.to_vec() }
    }
}

pub struct CaseBuilder {
    id: String,
    description: String,
    ops: Vec<&'static str>,
}

impl CaseBuilder {
    fn finish(self, lhs: String, rhs: String, residual: String, tolerance: Option<String>, pass: bool) -> Case {
        Case { id: self.id, description: self.description, lhs, rhs, residual, tolerance, pass, ops: self.ops }
    }

    /// Exact equality of two displayable values.
    pub fn exact<T: PartialEq + std::fmt::Display>(self, lhs: &T, rhs: &T) -> Case {
        let pass = lhs == rhs;
        let residual = if pass { "exact".to_string() } else { "inexact".to_string() };
        self.finish(lhs.to_string(), rhs.to_string(), residual, None, pass)
    }

    /// Exact rational equality; a mismatch reports |lhs - rhs| as a decimal.
    pub fn rational(self, lhs: &Rational, rhs: &Rational) -> Case {
        if lhs == rhs {
            return self.finish(lhs.to_string(), rhs.to_string(), "exact".into(), None, true);
        }
        let diff = BigFloat::from_rational(&(lhs - rhs), 64).abs();
        self.finish(lhs.to_string(), rhs.to_string(), diff.to_decimal(16), None, false)
    }

    /// Numeric agreement: `residual <= tolerance`, both printed at `digits`.
    pub fn numeric(self, lhs: &BigFloat, rhs: &BigFloat, residual: &BigFloat, tolerance: &BigFloat, digits: usize) -> Case {
        let pass = residual.cmp_exact(tolerance).is_le();
        self.finish(
            lhs.to_decimal(digits),
            rhs.to_decimal(digits),
            residual.to_decimal(8),
            Some(tolerance.to_decimal(8)),
            pass,
        )
    }

    /// A scalar residual checked against a tolerance, with free-form sides.
    pub fn bounded(self, lhs: String, rhs: String, residual: f64, tolerance: f64) -> Case {
        let pass = residual.is_finite() && residual <= tolerance;
        self.finish(lhs, rhs, format!("{residual:.6e}"), Some(format!("{tolerance:.6e}")), pass)
    }

    /// A p-adic congruence: passes when the difference has valuation at
    /// least `required`. The residual is the p-adic size `p^-v` of the
    /// difference, or `"exact"` when the congruence holds.
    pub fn congruence(self, lhs: String, rhs: String, p: u64, diff: Option<i64>, required: i64) -> Case {
        let pass = diff.is_none_or(|v| v >= required);
        let residual = match diff {
            _ if pass => "exact".to_string(),
            Some(v) => padic_size(p, v),
            None => unreachable!(),
        };
        self.finish(lhs, rhs, residual, Some(padic_size(p, required)), pass)
    }

    /// Like [`congruence`](Self::congruence) for a residue-level valuation report.
    pub fn residue_congruence(self, lhs: String, rhs: String, p: u64, v: PadicValuation, required: u32) -> Case {
        let diff = if v.at_least { None } else { Some(v.value as i64) };
        self.congruence(lhs, rhs, p, diff, required as i64)
    }
}

fn padic_size(p: u64, v: i64) -> String {
    format!("{p}^{}", -v)
}

/// Echo of the configuration a report was produced with.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConfigEcho {
    pub precision_bits: u32,
    pub max_index: u32,
    pub primes: Vec<u64>,
    pub depths: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// A reported quantity that is not asserted.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Diagnostic {
    pub id: String,
    pub description: String,
    #[serde(serialize_with = "pairs_as_map")]
    pub values: Vec<(String, String)>,
    pub note: String,
    #[serde(skip)]
    pub ops: Vec<&'static str>,
}

fn pairs_as_map<S: serde::Serializer>(pairs: &[(String, String)], ser: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = ser.serialize_map(Some(pairs.len()))?;
    for (k, v) in pairs {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub config: ConfigEcho,
    pub cases: Vec<Case>,
    pub diagnostics: Vec<Diagnostic>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: &str, config: ConfigEcho, mut cases: Vec<Case>, mut diagnostics: Vec<Diagnostic>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        diagnostics.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
        VerificationReport { suite: suite.to_string(), config, cases, diagnostics, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("id\tlhs\trhs\tresidual\tpass\n");
        for c in &self.cases {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", c.id, c.lhs, c.rhs, c.residual, c.pass);
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut rows: Vec<Vec<String>> = self
            .cases
            .iter()
            .map(|c| vec![c.id.clone(), if c.pass { "ok" } else { "FAIL" }.into(), c.residual.clone(), c.description.clone()])
            .collect();
        rows.insert(0, vec!["id".into(), "pass".into(), "residual".into(), "description".into()]);
        let mut out = align(&rows);
        for d in &self.diagnostics {
            let _ = writeln!(out, "\n[diagnostic] {}: {}", d.id, d.description);
            for (k, v) in &d.values {
                let _ = writeln!(out, "  {k} = {v}");
            }
            let _ = writeln!(out, "  note: {}", d.note);
        }
        let _ = writeln!(
            out,
            "\nsuite {}: {} cases, {} passed, {} failed",
            self.suite, self.summary.total, self.summary.passed, self.summary.failed
        );
        out
    }
}

/// A plain table of values produced by the non-verification commands.
#[derive(Clone, Debug, PartialEq)]
pub struct Listing {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
}

impl Listing {
    /// Rows rendered as JSON objects keyed by column name.
    pub fn from_rows(columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        let json = Value::Array(
            rows.iter()
                .map(|r| {
                    Value::Object(columns.iter().zip(r).map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect())
                })
                .collect(),
        );
        Listing { columns: columns.iter().map(|s| s.to_string()).collect(), rows, json }
    }

    pub fn with_json(mut self, json: Value) -> Self {
        self.json = json;
        self
    }

    pub fn to_table(&self) -> String {
        let mut all = vec![self.columns.clone()];
        all.extend(self.rows.iter().cloned());
        align(&all)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = self.columns.join("\t");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("listing serializes")
    }
}

fn align(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..ncols).map(|i| rows.iter().filter_map(|r| r.get(i)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (i, cell) in r.iter().enumerate() {
            if i + 1 == r.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
