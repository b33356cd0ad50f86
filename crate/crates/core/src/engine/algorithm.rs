//! The recursive-in-e Mullineux algorithm.
//!
//! For an `e`-regular `λ` that is not an `e`-core:
//!
//! 1. `(μ¹, μ²) = ψ̃_{(2e,(0,e))}(λ, λ)`;
//! 2. compute `m_{2e}(μ¹)` and `m_{2e}(μ²)` recursively;
//! 3. `(ν¹, ν²) = ψ̃_{(2e,(0,e))}^{-1}(m_{2e}(μ¹), m_{2e}(μ²))`;
//! 4. `m_e(λ) = ν¹ = ν²`.
//!
//! `e`-cores are sent to their conjugate. Correctness rests on the inclusion
//! conjecture for `Ψ` towers, so every inconsistency is reported as a
//! [`MullineuxError::ConjectureViolation`] carrying the trace so far.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::isomorphism::{psi_tilde, psi_tilde_inverse};
use crate::level1::mullineux_kleshchev;
use crate::level2::{Bicharge, Bipartition};
use crate::partition::{Modulus, Partition};

pub const DEFAULT_DEPTH_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MullineuxOptions {
    /// Number of doublings of `e` allowed below the top level.
    pub depth_limit: usize,
    /// Use Kleshchev's algorithm instead of failing when the limit is hit.
    pub oracle_fallback: bool,
}

impl Default for MullineuxOptions {
    fn default() -> Self {
        MullineuxOptions {
            depth_limit: DEFAULT_DEPTH_LIMIT,
            oracle_fallback: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MullineuxStep {
    /// `λ` is an `e`-core, `m_e(λ) = λ'`.
    Core,
    /// Oracle fallback at the depth limit.
    Oracle,
    /// One doubling of `e`.
    Recursive,
}

/// One level of the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MullineuxTrace {
    pub e: Modulus,
    pub depth: usize,
    pub lambda: Partition,
    pub step: MullineuxStep,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Bipartition>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<MullineuxTrace>,
    /// `(m_{2e}(μ¹), m_{2e}(μ²))`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub images: Option<Bipartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Bipartition>,
    pub result: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl MullineuxTrace {
    fn new(lambda: &Partition, e: Modulus, depth: usize, step: MullineuxStep) -> Self {
        MullineuxTrace {
            e,
            depth,
            lambda: lambda.clone(),
            step,
            mu: None,
            children: Vec::new(),
            images: None,
            nu: None,
            result: None,
            failure: None,
        }
    }

    /// Deepest level reached below this one.
    pub fn max_depth(&self) -> usize {
        self.children
            .iter()
            .map(MullineuxTrace::max_depth)
            .max()
            .unwrap_or(self.depth)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MullineuxError {
    #[error(transparent)]
    Input(#[from] Error),
    #[error("conjecture violation: {reason}")]
    ConjectureViolation {
        reason: String,
        trace: Box<MullineuxTrace>,
    },
    #[error("recursion depth limit {limit} exceeded")]
    DepthExceeded {
        limit: usize,
        trace: Box<MullineuxTrace>,
    },
}

impl MullineuxError {
    pub fn trace(&self) -> Option<&MullineuxTrace> {
        match self {
            MullineuxError::Input(_) => None,
            MullineuxError::ConjectureViolation { trace, .. }
            | MullineuxError::DepthExceeded { trace, .. } => Some(trace),
        }
    }
}

enum Failure {
    Violation(String),
    Depth,
}

pub fn mullineux_conjectural(
    lambda: &Partition,
    e: Modulus,
    depth_limit: usize,
) -> Result<(Partition, MullineuxTrace), MullineuxError> {
    let options = MullineuxOptions {
        depth_limit,
        ..MullineuxOptions::default()
    };
    mullineux_conjectural_with(lambda, e, &options)
}

pub fn mullineux_conjectural_with(
    lambda: &Partition,
    e: Modulus,
    options: &MullineuxOptions,
) -> Result<(Partition, MullineuxTrace), MullineuxError> {
    if !lambda.is_e_regular(e) {
        return Err(Error::NotRegular(lambda.to_string(), e.get()).into());
    }
    match solve(lambda, e, 0, options) {
        (trace, None) => {
            let result = trace.result.clone().expect("successful level has a result");
            Ok((result, trace))
        }
        (trace, Some(Failure::Depth)) => Err(MullineuxError::DepthExceeded {
            limit: options.depth_limit,
            trace: Box::new(trace),
        }),
        (trace, Some(Failure::Violation(reason))) => Err(MullineuxError::ConjectureViolation {
            reason,
            trace: Box::new(trace),
        }),
    }
}

fn fail(mut trace: MullineuxTrace, reason: String) -> (MullineuxTrace, Option<Failure>) {
    trace.failure = Some(reason.clone());
    (trace, Some(Failure::Violation(reason)))
}

fn solve(
    lambda: &Partition,
    e: Modulus,
    depth: usize,
    options: &MullineuxOptions,
) -> (MullineuxTrace, Option<Failure>) {
    if lambda.is_e_core(e) {
        let mut trace = MullineuxTrace::new(lambda, e, depth, MullineuxStep::Core);
        trace.result = Some(lambda.conjugate());
        return (trace, None);
    }
    if depth >= options.depth_limit {
        let mut trace = MullineuxTrace::new(lambda, e, depth, MullineuxStep::Oracle);
        if !options.oracle_fallback {
            trace.failure = Some(format!("depth limit {} reached", options.depth_limit));
            return (trace, Some(Failure::Depth));
        }
        return match mullineux_kleshchev(lambda, e) {
            Ok(image) => {
                trace.result = Some(image);
                (trace, None)
            }
            Err(err) => fail(trace, err.to_string()),
        };
    }

    let mut trace = MullineuxTrace::new(lambda, e, depth, MullineuxStep::Recursive);
    if !lambda.is_e_regular(e) {
        return fail(trace, format!("{lambda} is not {e}-regular"));
    }
    let doubled = e.doubled();
    let charge = Bicharge::new(0, e.get() as i64);

    let mu = match psi_tilde(doubled, charge, &Bipartition::doubled(lambda)) {
        Ok(mu) => mu,
        Err(err) => return fail(trace, format!("ψ̃ failed: {err}")),
    };
    trace.mu = Some(mu.clone());

    let mut images = Vec::with_capacity(2);
    for component in [&mu.first, &mu.second] {
        let (child, failure) = solve(component, doubled, depth + 1, options);
        images.push(child.result.clone());
        trace.children.push(child);
        if let Some(failure) = failure {
            trace.failure = Some(format!("recursion on {component} at e = {doubled} failed"));
            return (trace, Some(failure));
        }
    }
    let images = Bipartition::new(
        images[0].clone().expect("child succeeded"),
        images[1].clone().expect("child succeeded"),
    );
    trace.images = Some(images.clone());

    let nu = match psi_tilde_inverse(doubled, charge, &images) {
        Ok(nu) => nu,
        Err(err) => return fail(trace, format!("ψ̃ inverse failed: {err}")),
    };
    trace.nu = Some(nu.clone());
    if nu.first != nu.second {
        return fail(trace, format!("components of ν = {nu} differ"));
    }
    trace.result = Some(nu.first);
    (trace, None)
}
