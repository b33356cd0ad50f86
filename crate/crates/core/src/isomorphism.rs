//! The β-set bijection `Ψ` and the crystal isomorphisms it computes.
//!
//! `Ψ` sends `(X1, X2)` with `|X1| ≤ |X2|` to `(Y1, Y2)`: each element of `X1`,
//! smallest first, is matched to the largest unmatched element of `X2` not
//! exceeding it (or to the largest unmatched element when none does). `Y1` is
//! the set of matched elements and
//! `Y2 = (X1 + e) ∪ ((X2 \ Y1) + e) ∪ {0, …, e-1}`.
//!
//! Encoding a bipartition `(λ¹, λ²)` at bicharge `s` by
//! `(β(λ¹, m + s1), β(λ², m + s2))` turns `Ψ` into the crystal isomorphism
//! `ψ_{(e,s)} : Φ_{(e,s)} → Φ_{(e,s + (0,e))}`, and composing these until the
//! bicharge is very dominant gives `ψ̃_{(e,s)}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level2::{is_kleshchev, is_uglov, is_very_dominant, Bicharge, Bipartition};
use crate::partition::{BetaSet, Modulus};

/// The injection `φ` as `(a, φ(a))` pairs in processing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn image(&self) -> Vec<usize> {
        let mut image: Vec<usize> = self.pairs.iter().map(|&(_, b)| b).collect();
        image.sort_unstable();
        image
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(a, b)| a == b)
    }
}

/// `φ`: `max{b ≤ a}` among unmatched, else the unmatched maximum.
pub fn match_down(sources: &[usize], targets: &[usize]) -> Matching {
    let mut remaining: BTreeSet<usize> = targets.iter().copied().collect();
    let pairs = sources
        .iter()
        .map(|&a| {
            let b = remaining
                .range(..=a)
                .next_back()
                .or_else(|| remaining.iter().next_back())
                .copied()
                .expect("more targets than sources");
            remaining.remove(&b);
            (a, b)
        })
        .collect();
    Matching { pairs }
}

/// `φ′`: `min{b ≥ a}` among unmatched, else the unmatched minimum.
pub fn match_up(sources: &[usize], targets: &[usize]) -> Matching {
    let mut remaining: BTreeSet<usize> = targets.iter().copied().collect();
    let pairs = sources
        .iter()
        .map(|&a| {
            let b = remaining
                .range(a..)
                .next()
                .or_else(|| remaining.iter().next())
                .copied()
                .expect("more targets than sources");
            remaining.remove(&b);
            (a, b)
        })
        .collect();
    Matching { pairs }
}

/// `Ψ_e(X1, X2) = (Y1, Y2)`.
pub fn psi_step(e: Modulus, x1: &BetaSet, x2: &BetaSet) -> Result<(BetaSet, BetaSet)> {
    psi_step_with_matching(e, x1, x2).map(|(_, y1, y2)| (y1, y2))
}

pub fn psi_step_with_matching(
    e: Modulus,
    x1: &BetaSet,
    x2: &BetaSet,
) -> Result<(Matching, BetaSet, BetaSet)> {
    if x1.len() > x2.len() {
        return Err(Error::SizeOrder {
            first: x1.len(),
            second: x2.len(),
        });
    }
    let e = e.get();
    let phi = match_down(x1.elements(), x2.elements());
    let y1 = BetaSet::from_sorted(phi.image());
    let unmatched = x2.elements().iter().filter(|&&b| !y1.contains(b));
    let y2: Vec<usize> = (0..e)
        .chain(x1.elements().iter().map(|a| a + e))
        .chain(unmatched.map(|b| b + e))
        .collect();
    Ok((phi, y1, BetaSet::from_unsorted(y2)))
}

/// `Ψ_e^{-1}(Y1, Y2) = (X1, X2)`.
pub fn psi_step_inverse(e: Modulus, y1: &BetaSet, y2: &BetaSet) -> Result<(BetaSet, BetaSet)> {
    let e = e.get();
    let staircase = y2.elements().iter().take(e).copied().eq(0..e);
    if !staircase || y2.len() < e + y1.len() {
        return Err(Error::NotInImage(e));
    }
    let shifted: Vec<usize> = y2.elements()[e..].iter().map(|y| y - e).collect();
    let phi = match_up(y1.elements(), &shifted);
    let x1 = BetaSet::from_sorted(phi.image());
    let x2: Vec<usize> = y1
        .elements()
        .iter()
        .copied()
        .chain(shifted.into_iter().filter(|&b| !x1.contains(b)))
        .collect();
    Ok((x1, BetaSet::from_unsorted(x2)))
}

/// Two β-sets with the charge each row encodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSymbol {
    pub first_charge: i64,
    pub first: BetaSet,
    pub second_charge: i64,
    pub second: BetaSet,
}

/// One application of `ψ_{(e,s)}` (or its inverse) with its β-set symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiStage {
    /// Bicharge of the preimage side.
    pub charge: Bicharge,
    pub padding: i64,
    pub before: Bipartition,
    pub after: Bipartition,
    pub source_symbol: LabeledSymbol,
    pub image_symbol: LabeledSymbol,
}

fn check_order(s: Bicharge) -> Result<()> {
    if s.s1 > s.s2 {
        return Err(Error::ChargeOrder(s.s1, s.s2));
    }
    Ok(())
}

/// Least `m` with `m + s1 ≥ max(1, ℓ(λ¹))` and `m + s2 ≥ ℓ(λ²)`.
pub fn minimal_padding(blambda: &Bipartition, s: Bicharge) -> i64 {
    let first = blambda.first.len().max(1) as i64 - s.s1;
    let second = blambda.second.len() as i64 - s.s2;
    first.max(second)
}

fn encode(blambda: &Bipartition, s: Bicharge, m: i64) -> Result<LabeledSymbol> {
    let length = |charge: i64| usize::try_from(m + charge).unwrap_or(0);
    Ok(LabeledSymbol {
        first_charge: s.s1,
        first: blambda.first.beta_set(length(s.s1))?,
        second_charge: s.s2,
        second: blambda.second.beta_set(length(s.s2))?,
    })
}

fn decode(symbol: &LabeledSymbol) -> Bipartition {
    Bipartition::new(symbol.first.to_partition(), symbol.second.to_partition())
}

/// `ψ_{(e,s)}` computed with an explicit padding `m`.
pub fn psi_stage(e: Modulus, s: Bicharge, blambda: &Bipartition, m: i64) -> Result<PsiStage> {
    check_order(s)?;
    let source_symbol = encode(blambda, s, m)?;
    let (y1, y2) = psi_step(e, &source_symbol.first, &source_symbol.second)?;
    let image_symbol = LabeledSymbol {
        first_charge: s.s1,
        first: y1,
        second_charge: s.s2 + e.get() as i64,
        second: y2,
    };
    Ok(PsiStage {
        charge: s,
        padding: m,
        before: blambda.clone(),
        after: decode(&image_symbol),
        source_symbol,
        image_symbol,
    })
}

/// `ψ_{(e,s)}(λ¹, λ²)` for `s1 ≤ s2`.
pub fn psi_bipartition(e: Modulus, s: Bicharge, blambda: &Bipartition) -> Result<Bipartition> {
    check_order(s)?;
    psi_stage(e, s, blambda, minimal_padding(blambda, s)).map(|stage| stage.after)
}

/// `ψ_{(e,s)}^{-1}(κ)` where `κ` lives at bicharge `s + (0, e)`, with explicit `m`.
pub fn psi_inverse_stage(e: Modulus, s: Bicharge, kappa: &Bipartition, m: i64) -> Result<PsiStage> {
    check_order(s)?;
    let image_symbol = encode(kappa, s.shifted(e.get() as i64), m)?;
    let (x1, x2) = psi_step_inverse(e, &image_symbol.first, &image_symbol.second)?;
    let source_symbol = LabeledSymbol {
        first_charge: s.s1,
        first: x1,
        second_charge: s.s2,
        second: x2,
    };
    Ok(PsiStage {
        charge: s,
        padding: m,
        before: decode(&source_symbol),
        after: kappa.clone(),
        source_symbol,
        image_symbol,
    })
}

/// `ψ_{(e,s)}^{-1}(κ)` where `κ` lives at bicharge `s + (0, e)`.
///
/// The minimal padding for `κ` at `s` already places the staircase
/// `0..e` in the second β-set; larger paddings give the same preimage.
pub fn psi_bipartition_inverse(
    e: Modulus,
    s: Bicharge,
    kappa: &Bipartition,
) -> Result<Bipartition> {
    check_order(s)?;
    psi_inverse_stage(e, s, kappa, minimal_padding(kappa, s)).map(|stage| stage.before)
}

/// `λ¹_1 - 1 + s1 ≤ s2 - h` with `h = ℓ(λ²) + 1`.
///
/// When it holds the first β-set sits inside the second for every padding
/// and every later bicharge, so all further `ψ` steps are the identity.
pub fn shortcut_applies(blambda: &Bipartition, s: Bicharge) -> bool {
    let h = blambda.second.len() as i64 + 1;
    blambda.first.part(1) as i64 - 1 + s.s1 <= s.s2 - h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    Shortcut,
    VeryDominant,
}

/// The ψ steps performed by [`psi_tilde_traced`] or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiTrace {
    pub e: Modulus,
    pub charge: Bicharge,
    pub input: Bipartition,
    pub output: Bipartition,
    /// The bicharge at which the composite stopped.
    pub stable_charge: Bicharge,
    pub stop: StopReason,
    pub stages: Vec<PsiStage>,
}

fn stop_reason(blambda: &Bipartition, t: Bicharge, n: usize, e: Modulus) -> Option<StopReason> {
    if shortcut_applies(blambda, t) {
        Some(StopReason::Shortcut)
    } else if is_very_dominant(t, n, e) {
        Some(StopReason::VeryDominant)
    } else {
        None
    }
}

/// `ψ̃_{(e,s)}(bλ)`, the image in the Kleshchev set.
pub fn psi_tilde(e: Modulus, s: Bicharge, blambda: &Bipartition) -> Result<Bipartition> {
    psi_tilde_traced(e, s, blambda).map(|t| t.output)
}

pub fn psi_tilde_traced(e: Modulus, s: Bicharge, blambda: &Bipartition) -> Result<PsiTrace> {
    check_order(s)?;
    if !is_uglov(blambda, e, s) {
        return Err(Error::NotUglov(blambda.to_string(), e.get(), s.to_string()));
    }
    let n = blambda.rank();
    let step = e.get() as i64;
    let mut current = blambda.clone();
    let mut t = s;
    let mut stages = Vec::new();
    let stop = loop {
        if let Some(reason) = stop_reason(&current, t, n, e) {
            break reason;
        }
        let stage = psi_stage(e, t, &current, minimal_padding(&current, t))?;
        current = stage.after.clone();
        stages.push(stage);
        t = t.shifted(step);
    };
    Ok(PsiTrace {
        e,
        charge: s,
        input: blambda.clone(),
        output: current,
        stable_charge: t,
        stop,
        stages,
    })
}

/// `ψ̃_{(e,s)}^{-1}(κ)` for a Kleshchev bipartition `κ`.
pub fn psi_tilde_inverse(e: Modulus, s: Bicharge, kappa: &Bipartition) -> Result<Bipartition> {
    psi_tilde_inverse_traced(e, s, kappa).map(|t| t.output)
}

/// Finds the least `j` where `κ` is already stable at `s + (0, je)` and
/// undoes the ψ steps `j-1, …, 0`. Stages are listed in application order.
pub fn psi_tilde_inverse_traced(e: Modulus, s: Bicharge, kappa: &Bipartition) -> Result<PsiTrace> {
    check_order(s)?;
    if !is_kleshchev(kappa, e, s) {
        return Err(Error::NotKleshchev(
            kappa.to_string(),
            e.get(),
            s.to_string(),
        ));
    }
    let n = kappa.rank();
    let step = e.get() as i64;
    let mut j = 0;
    let stop = loop {
        if let Some(reason) = stop_reason(kappa, s.shifted(j * step), n, e) {
            break reason;
        }
        j += 1;
    };
    let mut current = kappa.clone();
    let mut stages = Vec::new();
    for level in (0..j).rev() {
        let t = s.shifted(level * step);
        let stage = psi_inverse_stage(e, t, &current, minimal_padding(&current, t))?;
        current = stage.before.clone();
        stages.push(stage);
    }
    Ok(PsiTrace {
        e,
        charge: s,
        input: kappa.clone(),
        output: current,
        stable_charge: s.shifted(j * step),
        stop,
        stages,
    })
}
