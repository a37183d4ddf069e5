//! Machine-readable output: the JSON report document and the CSV slack
//! table. Every real number is written with 12 significant digits.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bounds::BoundCheck;
use crate::energy::EnergyReport;
use crate::graph::DegreeProfile;
use crate::oracle::{IdentitySummary, SweepSummary};

pub const SCHEMA_VERSION: &str = "1";
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDescriptor {
    /// `graph6`, `edgelist`, `family`, `corpus`, `exhaustive` or `random`.
    pub kind: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub indexing: String,
    pub input: InputDescriptor,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_profile: Option<DegreeProfile>,
    #[serde(flatten, default)]
    pub energy: Option<EnergyReport>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub bound_checks: Vec<BoundCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sweep: Option<SweepSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identities: Option<IdentitySummary>,
}

impl ReportDocument {
    pub fn new(input: InputDescriptor) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            indexing: "0-based".to_string(),
            input,
            order: None,
            degree_profile: None,
            energy: None,
            bound_checks: Vec::new(),
            sweep: None,
            identities: None,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Rounds `x` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_significant(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with all floating-point numbers rounded.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report types serialize to JSON");
    round_value(&mut v);
    let mut text = serde_json::to_string_pretty(&v).expect("JSON values print");
    text.push('\n');
    text
}

/// `bound_id,worst_slack,witness_g6,equality_count`, one row per bound.
pub fn slack_table_csv(summary: &SweepSummary) -> String {
    let mut out = String::from("bound_id,worst_slack,witness_g6,equality_count\n");
    for b in &summary.bounds {
        let slack =
            b.worst_slack.map(|s| serde_json::to_string(&round_significant(s)).unwrap_or_default()).unwrap_or_default();
        let witness = b.worst_witness.clone().unwrap_or_default();
        out.push_str(&format!("{},{},{},{}\n", b.bound_id, slack, witness, b.tallies.equality));
    }
    out
}
