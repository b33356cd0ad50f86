use serde::{Deserialize, Serialize};

use crate::isomorphism::psi_step;
use crate::partition::{BetaSet, Modulus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerStep {
    pub k: usize,
    pub first: BetaSet,
    pub second: BetaSet,
    pub inclusion: bool,
}

/// `(X1, X2) = Ψ ∘ ⋯ ∘ Ψ (X, X)` with `k + 1` applications, for `k = 0..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerTrace {
    pub e: Modulus,
    pub start: BetaSet,
    pub steps: Vec<TowerStep>,
}

impl TowerTrace {
    pub fn step(&self, k: usize) -> Option<&TowerStep> {
        self.steps.get(k)
    }

    /// Odd `k` at which `X1 ⊂ X2` fails.
    pub fn odd_failures(&self) -> impl Iterator<Item = &TowerStep> {
        self.steps.iter().filter(|s| s.k % 2 == 1 && !s.inclusion)
    }
}

pub fn conjecture_tower(e: Modulus, x: &BetaSet, k_max: usize) -> TowerTrace {
    let mut steps = Vec::with_capacity(k_max + 1);
    let (mut first, mut second) = (x.clone(), x.clone());
    for k in 0..=k_max {
        let (y1, y2) = psi_step(e, &first, &second).expect("|X1| never exceeds |X2|");
        let inclusion = y1.is_subset(&y2);
        steps.push(TowerStep {
            k,
            first: y1.clone(),
            second: y2.clone(),
            inclusion,
        });
        first = y1;
        second = y2;
    }
    TowerTrace {
        e,
        start: x.clone(),
        steps,
    }
}
