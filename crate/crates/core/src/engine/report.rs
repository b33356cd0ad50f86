use serde::{Deserialize, Serialize};

use crate::partition::{BetaSet, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Conjecture,
    CrossValidation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepStatus {
    Verified,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParameters {
    pub e_list: Vec<usize>,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_only: Option<bool>,
}

/// Counts for one `(e, n)` bucket.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BucketSummary {
    pub e: usize,
    pub n: usize,
    pub cases: usize,
    pub regular_cases: usize,
    pub counterexamples: usize,
    /// Even `k` at which inclusion failed; expected and not a counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_failures: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth_exceeded: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_depth: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CounterexampleKind {
    /// `X1 ⊄ X2` at an odd `k`.
    Inclusion,
    /// The recursive algorithm disagrees with Kleshchev's.
    MullineuxMismatch,
    /// The recursive algorithm hit an inconsistency.
    ConjectureViolation,
    DepthExceeded,
    /// `ψ̃_{(2e,(0,e))}(λ,λ) ≠ ψ̃_{(e,(0,0))}(λ,λ)`.
    IsomorphismMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub kind: CounterexampleKind,
    pub e: usize,
    pub partition: Partition,
    pub regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_set: Option<BetaSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BucketTiming {
    pub e: usize,
    pub n: usize,
    pub seconds: f64,
}

/// Result of an exhaustive sweep.
///
/// Everything except `timings` is a deterministic function of the parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub parameters: SweepParameters,
    pub status: SweepStatus,
    pub cases_checked: usize,
    pub buckets: Vec<BucketSummary>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<BucketTiming>>,
}

impl SweepReport {
    pub fn is_verified(&self) -> bool {
        self.status == SweepStatus::Verified
    }

    /// The report with wall-clock data removed.
    pub fn without_timings(mut self) -> Self {
        self.timings = None;
        self
    }

    pub fn depth_exceeded(&self) -> usize {
        self.buckets.iter().filter_map(|b| b.depth_exceeded).sum()
    }

    pub(crate) fn assemble(
        kind: SweepKind,
        parameters: SweepParameters,
        buckets: Vec<(BucketSummary, Vec<Counterexample>, f64)>,
    ) -> Self {
        let cases_checked = buckets.iter().map(|(b, _, _)| b.cases).sum();
        let timings = buckets
            .iter()
            .map(|(b, _, seconds)| BucketTiming {
                e: b.e,
                n: b.n,
                seconds: *seconds,
            })
            .collect();
        let mut summaries = Vec::with_capacity(buckets.len());
        let mut counterexamples = Vec::new();
        for (summary, found, _) in buckets {
            summaries.push(summary);
            counterexamples.extend(found);
        }
        let status = if counterexamples.is_empty() {
            SweepStatus::Verified
        } else {
            SweepStatus::Counterexample
        };
        SweepReport {
            kind,
            parameters,
            status,
            cases_checked,
            buckets: summaries,
            counterexamples,
            timings: Some(timings),
        }
    }
}
