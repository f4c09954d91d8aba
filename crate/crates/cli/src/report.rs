//! JSON report envelope and result serializations.
//!
//! Everything under `results` is a deterministic function of the input; the
//! wall-clock time lives in the separate `timing` field.

use std::time::Instant;

use serde::Serialize;
use sinklab_core::engel::SinkReport;
use sinklab_core::GroupTable;

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub spec: String,
    pub results: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, spec: String, results: Vec<T>, started: Option<Instant>) -> Self {
        Report {
            tool: "sinklab",
            version: env!("CARGO_PKG_VERSION"),
            command,
            spec,
            results,
            timing: started.map(|t| Timing {
                elapsed_ms: t.elapsed().as_millis(),
            }),
        }
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("reports serialize"));
    }
}

#[derive(Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub exponent: usize,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub fitting_order: usize,
    pub fitting_index: usize,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub associative: Option<bool>,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub element: String,
    pub direction: String,
    pub steps: usize,
}

#[derive(Serialize)]
pub struct SinkJson {
    pub element: String,
    pub index: usize,
    pub sink: Vec<String>,
    pub sink_indices: Vec<usize>,
    pub size_full: usize,
    pub size_nontrivial: usize,
    pub witnesses: Vec<WitnessJson>,
}

impl SinkJson {
    pub fn new(group: &GroupTable, report: &SinkReport) -> Self {
        SinkJson {
            element: group.label(report.element).to_string(),
            index: report.element,
            sink: group.labels_of(&report.sink),
            sink_indices: report.sink.to_vec(),
            size_full: report.size_full,
            size_nontrivial: report.size_nontrivial,
            witnesses: report
                .witnesses
                .iter()
                .map(|(&z, w)| WitnessJson {
                    element: group.label(z).to_string(),
                    direction: group.label(w.direction).to_string(),
                    steps: w.steps,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct GammaJson {
    pub k: usize,
    pub size: usize,
    pub order: usize,
    pub labels: Vec<String>,
}
