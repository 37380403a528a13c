//! Serializable output documents.
//!
//! Counts and group orders are decimal strings so consumers with 53-bit
//! floats never truncate them. Every list is sorted before it gets here.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::constructions::PredictedTable;
use crate::feasibility::FeasibilityReport;
use crate::spectra::{OrderSpectrum, PosReport};
use crate::symmetric::WitnessReport;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub order: u64,
    pub count: String,
}

fn entries(spectrum: &OrderSpectrum) -> Vec<SpectrumEntry> {
    spectrum
        .iter()
        .map(|(order, count)| SpectrumEntry {
            order,
            count: count.to_string(),
        })
        .collect()
}

/// How a spectrum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Enumeration,
    Partitions,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub schema_version: String,
    pub kind: String,
    pub group: String,
    pub order: String,
    pub method: Method,
    pub spectrum: Vec<SpectrumEntry>,
}

impl SpectrumDoc {
    pub fn new(group: &str, order: &BigUint, method: Method, spectrum: &OrderSpectrum) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: "spectrum".into(),
            group: group.into(),
            order: order.to_string(),
            method,
            spectrum: entries(spectrum),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosReportDoc {
    pub schema_version: String,
    pub kind: String,
    pub group: String,
    pub order: String,
    pub method: Method,
    pub spectrum: Vec<SpectrumEntry>,
    pub is_pos: bool,
    pub violations: Vec<SpectrumEntry>,
}

impl PosReportDoc {
    pub fn new(report: &PosReport, method: Method) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: "pos-report".into(),
            group: report.group_label.clone(),
            order: report.group_order.to_string(),
            method,
            spectrum: entries(&report.spectrum),
            is_pos: report.is_pos,
            violations: report
                .violations
                .iter()
                .map(|(order, count)| SpectrumEntry {
                    order: *order,
                    count: count.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub schema_version: String,
    pub kind: String,
    pub n: u64,
    pub decomposition_target: u64,
    pub primes: Vec<u64>,
    pub witness_order: String,
    pub witness_count: String,
    pub group_order: String,
    pub divides: bool,
}

impl From<&WitnessReport> for WitnessDoc {
    fn from(w: &WitnessReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: "witness".into(),
            n: w.n,
            decomposition_target: w.decomposition_target,
            primes: w.primes.clone(),
            witness_order: w.witness_order.to_string(),
            witness_count: w.witness_count.to_string(),
            group_order: w.group_order.to_string(),
            divides: w.divides,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCheck {
    pub rule: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityRecord {
    pub n: u64,
    pub feasible: bool,
    pub realized_by: Option<String>,
    pub failed_rules: Vec<String>,
    pub checks: Vec<RuleCheck>,
}

impl From<&FeasibilityReport> for FeasibilityRecord {
    fn from(r: &FeasibilityReport) -> Self {
        Self {
            n: r.n,
            feasible: r.feasible,
            realized_by: r.realized_by.clone(),
            failed_rules: r.failed_rules().map(|rule| rule.id().to_string()).collect(),
            checks: r
                .checks
                .iter()
                .map(|c| RuleCheck {
                    rule: c.rule.id().into(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityDoc {
    pub schema_version: String,
    pub kind: String,
    pub min: u64,
    pub max: u64,
    pub records: Vec<FeasibilityRecord>,
}

impl FeasibilityDoc {
    pub fn new(min: u64, max: u64, reports: &[FeasibilityReport]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: "feasibility".into(),
            min,
            max,
            records: reports.iter().map(FeasibilityRecord::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeDoc {
    pub schema_version: String,
    pub kind: String,
    pub bound: u64,
    pub survivors: Vec<u64>,
}

impl ProbeDoc {
    pub fn new(bound: u64, survivors: Vec<u64>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: "probe".into(),
            bound,
            survivors,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub order: u64,
    pub predicted: String,
    /// `None` when enumeration was skipped.
    pub enumerated: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableComparisonDoc {
    pub schema_version: String,
    pub kind: String,
    pub family: String,
    pub order: String,
    pub enumerated: bool,
    pub rows: Vec<TableRow>,
    /// `None` when enumeration was skipped.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl TableComparisonDoc {
    pub fn new(
        family: &str,
        order: &BigUint,
        predicted: &PredictedTable,
        enumerated: Option<&OrderSpectrum>,
    ) -> Self {
        let predicted_spectrum = predicted.to_spectrum();
        let mut orders: Vec<u64> = predicted_spectrum.orders().collect();
        if let Some(e) = enumerated {
            orders.extend(e.orders());
        }
        orders.sort_unstable();
        orders.dedup();
        let count_str = |s: &OrderSpectrum, o: u64| {
            s.count(o)
                .map_or_else(|| "0".to_string(), BigUint::to_string)
        };
        let rows = orders
            .into_iter()
            .map(|o| TableRow {
                order: o,
                predicted: count_str(&predicted_spectrum, o),
                enumerated: enumerated.map(|e| count_str(e, o)),
            })
            .collect();
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: "table-comparison".into(),
            family: family.into(),
            order: order.to_string(),
            enumerated: enumerated.is_some(),
            rows,
            matches: enumerated.map(|e| predicted.matches(e)),
        }
    }
}

/// Any document the CLI can emit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum OutputDocument {
    Spectrum(SpectrumDoc),
    PosReport(PosReportDoc),
    Witness(WitnessDoc),
    Feasibility(FeasibilityDoc),
    Probe(ProbeDoc),
    TableComparison(TableComparisonDoc),
}

impl OutputDocument {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}
