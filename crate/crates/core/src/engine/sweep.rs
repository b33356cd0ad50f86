//! Exhaustive sweeps. Work inside a bucket runs on the current rayon pool;
//! results are collected in enumeration order, so reports do not depend on
//! the number of worker threads.

use std::time::Instant;

use rayon::prelude::*;

use super::algorithm::{mullineux_conjectural_with, MullineuxError, MullineuxOptions};
use super::report::{
    BucketSummary, Counterexample, CounterexampleKind, SweepKind, SweepParameters, SweepReport,
};
use super::tower::conjecture_tower;
use crate::isomorphism::psi_tilde;
use crate::level1::mullineux_kleshchev;
use crate::level2::{Bicharge, Bipartition};
use crate::partition::{enumerate_partitions, Modulus, Partition};

struct Outcome {
    regular: bool,
    even_failures: usize,
    depth_exceeded: usize,
    depth: usize,
    found: Vec<Counterexample>,
}

fn run_bucket<F>(
    e: Modulus,
    n: usize,
    regular_only: bool,
    check: F,
) -> (BucketSummary, Vec<Counterexample>, f64)
where
    F: Fn(&Partition) -> Outcome + Sync,
{
    let start = Instant::now();
    let partitions: Vec<Partition> = enumerate_partitions(n)
        .filter(|p| !regular_only || p.is_e_regular(e))
        .collect();
    let outcomes: Vec<Outcome> = partitions.par_iter().map(&check).collect();

    let mut summary = BucketSummary {
        e: e.get(),
        n,
        cases: outcomes.len(),
        ..Default::default()
    };
    let mut found = Vec::new();
    let (mut even, mut depth_exceeded, mut max_depth) = (0, 0, 0);
    for outcome in outcomes {
        summary.regular_cases += usize::from(outcome.regular);
        even += outcome.even_failures;
        depth_exceeded += outcome.depth_exceeded;
        max_depth = max_depth.max(outcome.depth);
        found.extend(outcome.found);
    }
    summary.counterexamples = found.len();
    summary.even_failures = Some(even);
    summary.depth_exceeded = Some(depth_exceeded);
    summary.max_depth = Some(max_depth);
    (summary, found, start.elapsed().as_secs_f64())
}

/// Runs [`conjecture_tower`] on `β(λ, max(1, ℓ(λ)))` for every partition of
/// rank `≤ n_max` (only `e`-regular ones when `regular_only`), and records
/// every odd `k ≤ k_max` where inclusion fails.
pub fn sweep_conjecture(
    e_list: &[Modulus],
    n_max: usize,
    k_max: usize,
    regular_only: bool,
) -> SweepReport {
    let mut buckets = Vec::new();
    for &e in e_list {
        for n in 0..=n_max {
            let (mut summary, found, seconds) = run_bucket(e, n, regular_only, |lambda| {
                let x = lambda
                    .beta_set(lambda.len().max(1))
                    .expect("length covers parts");
                let trace = conjecture_tower(e, &x, k_max);
                let regular = lambda.is_e_regular(e);
                let even_failures = trace
                    .steps
                    .iter()
                    .filter(|s| s.k % 2 == 0 && !s.inclusion)
                    .count();
                let found = trace
                    .odd_failures()
                    .map(|step| {
                        let missing: Vec<usize> = step
                            .first
                            .elements()
                            .iter()
                            .copied()
                            .filter(|&a| !step.second.contains(a))
                            .collect();
                        Counterexample {
                            kind: CounterexampleKind::Inclusion,
                            e: e.get(),
                            partition: lambda.clone(),
                            regular,
                            beta_set: Some(x.clone()),
                            k: Some(step.k),
                            details: format!(
                                "X1 = {} not contained in X2 = {}; missing {:?}",
                                step.first, step.second, missing
                            ),
                        }
                    })
                    .collect();
                Outcome {
                    regular,
                    even_failures,
                    depth_exceeded: 0,
                    depth: 0,
                    found,
                }
            });
            summary.depth_exceeded = None;
            summary.max_depth = None;
            buckets.push((summary, found, seconds));
        }
    }
    let parameters = SweepParameters {
        e_list: e_list.iter().map(|e| e.get()).collect(),
        n_max,
        k_max: Some(k_max),
        regular_only: Some(regular_only),
    };
    SweepReport::assemble(SweepKind::Conjecture, parameters, buckets)
}

/// Compares the recursive algorithm with Kleshchev's on every `e`-regular
/// partition of rank `≤ n_max`, and checks
/// `ψ̃_{(2e,(0,e))}(λ,λ) = ψ̃_{(e,(0,0))}(λ,λ)`.
pub fn cross_validate(e_list: &[Modulus], n_max: usize) -> SweepReport {
    cross_validate_with(e_list, n_max, &MullineuxOptions::default())
}

pub fn cross_validate_with(
    e_list: &[Modulus],
    n_max: usize,
    options: &MullineuxOptions,
) -> SweepReport {
    let mut buckets = Vec::new();
    for &e in e_list {
        for n in 0..=n_max {
            let (mut summary, found, seconds) =
                run_bucket(e, n, true, |lambda| cross_check(lambda, e, options));
            summary.even_failures = None;
            buckets.push((summary, found, seconds));
        }
    }
    let parameters = SweepParameters {
        e_list: e_list.iter().map(|e| e.get()).collect(),
        n_max,
        k_max: None,
        regular_only: None,
    };
    SweepReport::assemble(SweepKind::CrossValidation, parameters, buckets)
}

fn cross_check(lambda: &Partition, e: Modulus, options: &MullineuxOptions) -> Outcome {
    let counterexample = |kind, details: String| Counterexample {
        kind,
        e: e.get(),
        partition: lambda.clone(),
        regular: true,
        beta_set: None,
        k: None,
        details,
    };
    let mut found = Vec::new();
    let mut depth_exceeded = 0;
    let mut depth = 0;

    let oracle = mullineux_kleshchev(lambda, e).expect("sweep only visits regular partitions");
    match mullineux_conjectural_with(lambda, e, options) {
        Ok((image, trace)) => {
            depth = trace.max_depth();
            if image != oracle {
                found.push(counterexample(
                    CounterexampleKind::MullineuxMismatch,
                    format!("recursive {image} but Kleshchev {oracle}"),
                ));
            }
        }
        Err(MullineuxError::DepthExceeded { limit, .. }) => {
            depth_exceeded = 1;
            found.push(counterexample(
                CounterexampleKind::DepthExceeded,
                format!("depth limit {limit} exceeded"),
            ));
        }
        Err(err) => found.push(counterexample(
            CounterexampleKind::ConjectureViolation,
            err.to_string(),
        )),
    }

    let pair = Bipartition::doubled(lambda);
    let doubled = psi_tilde(e.doubled(), Bicharge::new(0, e.get() as i64), &pair);
    let single = psi_tilde(e, Bicharge::new(0, 0), &pair);
    match (doubled, single) {
        (Ok(a), Ok(b)) if a == b => {}
        (a, b) => found.push(counterexample(
            CounterexampleKind::IsomorphismMismatch,
            format!("ψ̃ at 2e gives {a:?}, at e gives {b:?}"),
        )),
    }

    Outcome {
        regular: true,
        even_failures: 0,
        depth_exceeded,
        depth,
        found,
    }
}
