//! Conjecture sweeps and the recursive-in-e Mullineux algorithm.

mod algorithm;
mod report;
mod sweep;
mod tower;

pub use algorithm::{
    mullineux_conjectural, mullineux_conjectural_with, MullineuxError, MullineuxOptions,
    MullineuxStep, MullineuxTrace, DEFAULT_DEPTH_LIMIT,
};
pub use report::{
    BucketSummary, BucketTiming, Counterexample, CounterexampleKind, SweepKind, SweepParameters,
    SweepReport, SweepStatus,
};
pub use sweep::{cross_validate, cross_validate_with, sweep_conjecture};
pub use tower::{conjecture_tower, TowerStep, TowerTrace};
