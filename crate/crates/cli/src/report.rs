//! The verification report and its JSON, CSV and text renderings.

use std::io::{self, Write};

use chemtree::{Family, Index};
use serde::Serialize;

use crate::harness::{display, Agreement, VerificationRecord};

pub const TOOL_VERSION: &str = concat!("ct ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AgreementCounts {
    pub exact: usize,
    pub formula_only_mismatch: usize,
    pub class_only_mismatch: usize,
    pub both_mismatch: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub families: Vec<String>,
    pub n_min: usize,
    pub n_max: usize,
    pub indices: Vec<String>,
    pub jobs: usize,
    pub cache: bool,
}

/// A tree named in a finding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeNote {
    pub code: String,
    pub value: u64,
    pub failed_conditions: Vec<String>,
}

/// A disagreement that does not by itself fail a record, or explains a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Finding {
    /// The brute-force maximizers differ from the members of the extremal class.
    ClassMismatch {
        #[serde(serialize_with = "display")]
        family: Family,
        n: usize,
        p: usize,
        #[serde(serialize_with = "display")]
        index: Index,
        maximizers_outside_class: Vec<CodeNote>,
        members_below_max: Vec<CodeNote>,
    },
    /// The constructed witness misses the bound or the class.
    Witness {
        #[serde(serialize_with = "display")]
        family: Family,
        n: usize,
        p: usize,
        #[serde(serialize_with = "display")]
        index: Index,
        value: u64,
        failed_conditions: Vec<String>,
    },
    /// The closed form as originally stated differs from the verified maximum.
    StatedFormula {
        #[serde(serialize_with = "display")]
        family: Family,
        n: usize,
        p: usize,
        #[serde(serialize_with = "display")]
        index: Index,
        stated: u64,
        verified: u64,
        brute_max: Option<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
    pub tool_version: String,
    pub config: ConfigEcho,
    pub findings: Vec<Finding>,
    pub agreement: AgreementCounts,
}

impl Report {
    pub fn new(records: Vec<VerificationRecord>, config: ConfigEcho, findings: Vec<Finding>) -> Self {
        let pass = records.iter().filter(|r| r.pass).count();
        let mut agreement = AgreementCounts::default();
        for r in &records {
            *match r.maximizer_class_agreement {
                Agreement::Exact => &mut agreement.exact,
                Agreement::FormulaOnlyMismatch => &mut agreement.formula_only_mismatch,
                Agreement::ClassOnlyMismatch => &mut agreement.class_only_mismatch,
                Agreement::BothMismatch => &mut agreement.both_mismatch,
            } += 1;
        }
        Report {
            summary: Summary { pass, fail: records.len() - pass },
            records,
            tool_version: TOOL_VERSION.to_owned(),
            config,
            findings,
            agreement,
        }
    }

    /// 0 when every record passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    /// Share of records whose maximizer set equals the class; 1 for an empty report.
    pub fn agreement_rate(&self) -> f64 {
        if self.records.is_empty() {
            1.0
        } else {
            self.agreement.exact as f64 / self.records.len() as f64
        }
    }

    pub fn emit(&self, format: ReportFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            ReportFormat::Json => {
                serde_json::to_writer(&mut *out, self)?;
                writeln!(out)
            }
            ReportFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                if self.records.is_empty() {
                    w.write_record(CSV_HEADER)?;
                }
                for r in &self.records {
                    w.serialize(r)?;
                }
                w.flush()
            }
            ReportFormat::Text => self.emit_text(out),
        }
    }

    fn emit_text(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in &self.records {
            let param = if r.family == Family::Segments { "k" } else { "b" };
            let brute = r.brute_max.map_or_else(|| "-".to_owned(), |v| v.to_string());
            writeln!(
                out,
                "{} {:<9} n={:<2} {param}={:<2} {} formula={:<4} brute={:<4} trees={:<5} maximizers={:<3} class={} witness={}",
                if r.pass { "PASS" } else { "FAIL" },
                r.family,
                r.n,
                r.p,
                r.index,
                r.formula_value,
                brute,
                r.n_trees,
                r.n_maximizers,
                serde_json::to_value(r.maximizer_class_agreement).unwrap().as_str().unwrap_or_default(),
                if r.witness_ok { "ok" } else { "FAILED" },
            )?;
        }
        writeln!(out, "{}", self.tool_version)?;
        writeln!(out, "records: {} pass, {} fail", self.summary.pass, self.summary.fail)?;
        writeln!(out, "maximizer/class agreement: {}/{}", self.agreement.exact, self.records.len())?;
        writeln!(out, "findings: {}", self.findings.len())?;
        for f in &self.findings {
            writeln!(out, "  {}", serde_json::to_string(f).map_err(io::Error::other)?)?;
        }
        Ok(())
    }
}

const CSV_HEADER: [&str; 14] = [
    "family",
    "n",
    "p",
    "index",
    "regime",
    "formula_value",
    "brute_max",
    "n_trees",
    "n_maximizers",
    "n_class_members",
    "maximizer_class_agreement",
    "witness_ok",
    "pass",
    "elapsed_ms",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn record(pass: bool) -> VerificationRecord {
        VerificationRecord {
            family: Family::Segments,
            n: 7,
            p: 4,
            index: Index::M1,
            regime: "segments-M1/k≡1".into(),
            formula_value: 28,
            brute_max: Some(if pass { 28 } else { 27 }),
            n_trees: 2,
            n_maximizers: 1,
            n_class_members: 1,
            maximizer_class_agreement: if pass { Agreement::Exact } else { Agreement::FormulaOnlyMismatch },
            witness_ok: true,
            pass,
            elapsed_ms: 0.5,
        }
    }

    fn render(r: &Report, f: ReportFormat) -> String {
        let mut buf = Vec::new();
        r.emit(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_json_report() {
        let r = Report::new(Vec::new(), ConfigEcho::default(), Vec::new());
        assert!(render(&r, ReportFormat::Json)
            .starts_with(r#"{"records":[],"summary":{"pass":0,"fail":0},"tool_version":"#));
        assert_eq!(r.exit_code(), 0);
        assert_eq!(render(&r, ReportFormat::Csv).lines().count(), 1);
    }

    #[test]
    fn one_pass_record_csv() {
        let r = Report::new(vec![record(true)], ConfigEcho::default(), Vec::new());
        let csv = render(&r, ReportFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert!(lines[1].starts_with("segments,7,4,M1,segments-M1/k≡1,28,28,2,1,1,exact,true,true,"));
    }

    #[test]
    fn mismatch_sets_exit_code() {
        let r = Report::new(vec![record(true), record(false)], ConfigEcho::default(), Vec::new());
        assert_eq!((r.summary.pass, r.summary.fail), (1, 1));
        assert_eq!(r.exit_code(), 1);
        assert!(render(&r, ReportFormat::Text).contains("FAIL segments"));
    }
}
