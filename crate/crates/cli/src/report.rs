//! The JSON envelope shared by every command.

use mullineux::engine::{BucketSummary, BucketTiming, Counterexample};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1.0";

/// Field order here is the order in the emitted JSON.
#[derive(Debug, Serialize)]
pub struct ReportDocument<P, R> {
    pub schema_version: &'static str,
    /// Normalized command line; `--jobs` is left out so that reports do not
    /// depend on it.
    pub command: String,
    pub parameters: P,
    pub results: R,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock data, present only with `--timings`.
    pub timing: Option<Timing>,
}

impl<P: Serialize, R: Serialize> ReportDocument<P, R> {
    pub fn new(command: String, parameters: P, results: R) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            parameters,
            results,
            counterexamples: Vec::new(),
            timing: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub total_seconds: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub buckets: Vec<BucketTiming>,
}

/// One CSV line per `(e, n)` bucket.
#[derive(Debug, Serialize)]
pub struct CsvRow {
    pub e: usize,
    pub n: usize,
    pub cases: usize,
    pub regular_cases: usize,
    pub counterexamples: usize,
    pub even_failures: Option<usize>,
    pub depth_exceeded: Option<usize>,
    pub max_depth: Option<usize>,
}

impl From<&BucketSummary> for CsvRow {
    fn from(b: &BucketSummary) -> Self {
        CsvRow {
            e: b.e,
            n: b.n,
            cases: b.cases,
            regular_cases: b.regular_cases,
            counterexamples: b.counterexamples,
            even_failures: b.even_failures,
            depth_exceeded: b.depth_exceeded,
            max_depth: b.max_depth,
        }
    }
}
