//! Independent oracles and exhaustive property checks shared by the
//! property suite and the acceptance target.

#![allow(dead_code)]

use mullineux::isomorphism::{
    minimal_padding, psi_bipartition, psi_stage, psi_tilde, psi_tilde_inverse,
};
use mullineux::level1::{
    e_tilde, f_tilde, mullineux_kleshchev, residue_path_to_empty, ResiduePath,
};
use mullineux::level2::{
    componentwise_mullineux, e_tilde2, enumerate_bipartitions, f_tilde2, is_kleshchev, is_uglov,
    is_very_dominant, mullineux_level2, mullineux_level2_at, replay2, very_dominant_representative,
    Bicharge, Bipartition,
};
use mullineux::partition::{enumerate_e_regular, enumerate_partitions, enumerate_up_to};
use mullineux::{Modulus, Partition};

pub type Check = Result<usize, String>;

pub fn modulus(e: usize) -> Modulus {
    Modulus::new(e).unwrap()
}

pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub const MODULI: [usize; 4] = [2, 3, 4, 5];

pub fn charges() -> Vec<Bicharge> {
    [(0, 0), (0, 1), (0, 2), (0, 3), (0, 5), (-2, 1), (1, 4)]
        .into_iter()
        .map(|(a, b)| Bicharge::new(a, b))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- oracles

/// `e`-core test through hook lengths.
pub fn is_core_by_hooks(lambda: &Partition, e: usize) -> bool {
    let conj = lambda.conjugate();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.parts()[j] - i - 1) + 1;
            if hook.is_multiple_of(e) {
                return false;
            }
        }
    }
    true
}

/// Number of partitions of `n` with parts `≤ k`.
fn count_bounded(n: usize, k: usize, memo: &mut Vec<Vec<Option<u64>>>) -> u64 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    if let Some(v) = memo[n][k] {
        return v;
    }
    let mut total = count_bounded(n, k - 1, memo);
    if k <= n {
        total += count_bounded(n - k, k, memo);
    }
    memo[n][k] = Some(total);
    total
}

pub fn partition_count(n: usize) -> u64 {
    let mut memo = vec![vec![None; n + 1]; n + 1];
    count_bounded(n, n, &mut memo)
}

/// Partitions of `n` into parts not divisible by `e`; equinumerous with the
/// `e`-regular ones.
pub fn glaisher_count(n: usize, e: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in (1..=n).filter(|p| p % e != 0) {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// The Mullineux symbol: repeatedly strip the `e`-rim, recording its size
/// and the number of rows of the partition it was taken from.
pub fn mullineux_symbol(lambda: &Partition, e: usize) -> Vec<(usize, usize)> {
    let mut rows: Vec<usize> = lambda.parts().to_vec();
    let mut symbol = Vec::new();
    while !rows.is_empty() {
        let height = rows.len();
        let mut removed = vec![0usize; height];
        let mut start = 0;
        while start < height {
            // walk the rim from the end of row `start`, at most `e` nodes
            let (mut i, mut j) = (start, rows[start] - 1);
            let mut taken = 0;
            loop {
                removed[i] += 1;
                taken += 1;
                if taken == e {
                    break;
                }
                if i + 1 < height && rows[i + 1] > j {
                    i += 1;
                } else if j > 0 {
                    j -= 1;
                } else {
                    break;
                }
            }
            start = i + 1;
        }
        let size: usize = removed.iter().sum();
        symbol.push((size, height));
        rows = rows
            .iter()
            .zip(&removed)
            .map(|(r, d)| r - d)
            .filter(|&r| r > 0)
            .collect();
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "rim removal left a non-partition"
        );
    }
    symbol
}

/// The symbol of `m_e(λ)` predicted from that of `λ`.
pub fn twisted_symbol(symbol: &[(usize, usize)], e: usize) -> Vec<(usize, usize)> {
    symbol
        .iter()
        .map(|&(a, r)| (a, a + usize::from(a % e != 0) - r))
        .collect()
}

/// A stripping path that picks the `pick`-th defined residue (cyclically)
/// instead of the smallest one.
pub fn alternative_path(lambda: &Partition, e: Modulus, pick: usize) -> ResiduePath {
    let mut current = lambda.clone();
    let mut residues = Vec::new();
    let mut step = 0;
    while !current.is_empty() {
        let options: Vec<(usize, Partition)> = (0..e.get())
            .filter_map(|j| e_tilde(&current, j, e).map(|mu| (j, mu)))
            .collect();
        let (j, mu) = options[(pick + step) % options.len()].clone();
        residues.push(j);
        current = mu;
        step += 1;
    }
    ResiduePath::new(residues)
}

// ------------------------------------------------------- level 1 properties

pub fn check_conjugate_involution(n_max: usize) -> Check {
    let mut cases = 0;
    for lambda in enumerate_up_to(n_max) {
        let conj = lambda.conjugate();
        ensure(
            conj.conjugate() == lambda && conj.rank() == lambda.rank(),
            || format!("conjugate involution fails at {lambda}"),
        )?;
        cases += 1;
    }
    Ok(cases)
}

pub fn check_beta_round_trip(n_max: usize) -> Check {
    let mut cases = 0;
    for lambda in enumerate_up_to(n_max) {
        for extra in 0..4 {
            let length = lambda.len().max(1) + extra;
            let beta = lambda.beta_set(length).map_err(|e| e.to_string())?;
            ensure(beta.to_partition() == lambda, || {
                format!("β round trip fails at {lambda}")
            })?;
            let next = lambda.beta_set(length + 1).map_err(|e| e.to_string())?;
            ensure(beta.padded() == next, || {
                format!("β shift rule fails at {lambda}")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_level1_adjointness(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for lambda in enumerate_up_to(n_max) {
            for j in 0..e {
                if let Some(mu) = f_tilde(&lambda, j, m) {
                    ensure(e_tilde(&mu, j, m).as_ref() == Some(&lambda), || {
                        format!("ẽ_{j} f̃_{j} {lambda} ≠ {lambda} at e = {e}")
                    })?;
                }
                if let Some(mu) = e_tilde(&lambda, j, m) {
                    ensure(f_tilde(&mu, j, m).as_ref() == Some(&lambda), || {
                        format!("f̃_{j} ẽ_{j} {lambda} ≠ {lambda} at e = {e}")
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_mullineux_involution(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for n in 0..=n_max {
            for lambda in enumerate_e_regular(n, m) {
                let image = mullineux_kleshchev(&lambda, m).map_err(|e| e.to_string())?;
                ensure(image.rank() == n && image.is_e_regular(m), || {
                    format!("m_{e}({lambda}) = {image} lost rank or regularity")
                })?;
                let back = mullineux_kleshchev(&image, m).map_err(|e| e.to_string())?;
                ensure(back == lambda, || {
                    format!("m_{e} is not an involution at {lambda}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_core_conjugate(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for lambda in enumerate_up_to(n_max) {
            ensure(lambda.is_e_core(m) == is_core_by_hooks(&lambda, e), || {
                format!("core tests disagree on {lambda} at e = {e}")
            })?;
            if lambda.is_e_core(m) {
                let image = mullineux_kleshchev(&lambda, m).map_err(|e| e.to_string())?;
                ensure(image == lambda.conjugate(), || {
                    format!("m_{e}({lambda}) = {image}, expected the conjugate")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_mullineux_symbols(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for n in 0..=n_max {
            for lambda in enumerate_e_regular(n, m) {
                let image = mullineux_kleshchev(&lambda, m).map_err(|e| e.to_string())?;
                let expected = twisted_symbol(&mullineux_symbol(&lambda, e), e);
                ensure(mullineux_symbol(&image, e) == expected, || {
                    format!("Mullineux symbol of m_{e}({lambda}) = {image} is not the twist")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

// ------------------------------------------------------- level 2 properties

fn bipartitions_up_to(n_max: usize) -> impl Iterator<Item = Bipartition> {
    (0..=n_max).flat_map(enumerate_bipartitions)
}

pub fn check_level2_adjointness(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for s in charges() {
            for b in bipartitions_up_to(n_max) {
                for i in 0..e {
                    if let Some(c) = f_tilde2(&b, i, m, s) {
                        ensure(e_tilde2(&c, i, m, s).as_ref() == Some(&b), || {
                            format!("ẽ f̃ ≠ id on {b} at e = {e}, s = {s}, i = {i}")
                        })?;
                    }
                    if let Some(c) = e_tilde2(&b, i, m, s) {
                        ensure(f_tilde2(&c, i, m, s).as_ref() == Some(&b), || {
                            format!("f̃ ẽ ≠ id on {b} at e = {e}, s = {s}, i = {i}")
                        })?;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

fn uglov_members(n_max: usize, e: Modulus, s: Bicharge) -> Vec<Bipartition> {
    bipartitions_up_to(n_max)
        .filter(|b| is_uglov(b, e, s))
        .collect()
}

pub fn check_psi_rank_and_padding(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for s in charges() {
            for b in uglov_members(n_max, m, s) {
                let pad = minimal_padding(&b, s);
                let stages: Vec<Bipartition> = [pad, pad + 1, pad + 5]
                    .iter()
                    .map(|&k| psi_stage(m, s, &b, k).map(|st| st.after))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                ensure(stages[0].rank() == b.rank(), || {
                    format!("ψ changes the rank of {b}")
                })?;
                ensure(stages.iter().all(|x| *x == stages[0]), || {
                    format!("ψ depends on the padding for {b} at e = {e}, s = {s}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_psi_equivariance(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for s in charges() {
            let target = s.shifted(e as i64);
            for b in uglov_members(n_max, m, s) {
                let image = psi_bipartition(m, s, &b).map_err(|e| e.to_string())?;
                ensure(is_uglov(&image, m, target), || {
                    format!("ψ({b}) left the Uglov set")
                })?;
                for i in 0..e {
                    let lhs = f_tilde2(&b, i, m, s).map(|c| psi_bipartition(m, s, &c).unwrap());
                    ensure(lhs == f_tilde2(&image, i, m, target), || {
                        format!("ψ does not commute with f̃_{i} on {b} at e = {e}, s = {s}")
                    })?;
                    let lhs = e_tilde2(&b, i, m, s).map(|c| psi_bipartition(m, s, &c).unwrap());
                    ensure(lhs == e_tilde2(&image, i, m, target), || {
                        format!("ψ does not commute with ẽ_{i} on {b} at e = {e}, s = {s}")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

pub fn check_very_dominant_identity(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for n in 0..=n_max {
            for d in 0..e as i64 {
                let s = very_dominant_representative(Bicharge::new(0, d), n, m);
                for b in enumerate_bipartitions(n).filter(|b| is_uglov(b, m, s)) {
                    ensure(is_very_dominant(s, n, m), || {
                        format!("{s} is not very dominant")
                    })?;
                    let image = psi_bipartition(m, s, &b).map_err(|e| e.to_string())?;
                    ensure(image == b, || {
                        format!("ψ moves {b} at very dominant {s}, e = {e}")
                    })?;
                    let tilde = psi_tilde(m, s, &b).map_err(|e| e.to_string())?;
                    ensure(tilde == b, || {
                        format!("ψ̃ moves {b} at very dominant {s}, e = {e}")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

pub fn check_psi_tilde_round_trip(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for s in charges() {
            for b in uglov_members(n_max, m, s) {
                let image = psi_tilde(m, s, &b).map_err(|e| e.to_string())?;
                ensure(is_kleshchev(&image, m, s), || {
                    format!("ψ̃({b}) is not Kleshchev")
                })?;
                let back = psi_tilde_inverse(m, s, &image).map_err(|e| e.to_string())?;
                ensure(back == b, || {
                    format!("ψ̃⁻¹ ψ̃ ≠ id on {b} at e = {e}, s = {s}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_doubled_replays(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        let doubled = m.doubled();
        for n in 0..=n_max {
            for lambda in enumerate_e_regular(n, m) {
                let path = residue_path_to_empty(&lambda, m).map_err(|e| e.to_string())?;
                let pair = Bipartition::doubled(&lambda);
                let twice: ResiduePath = path.residues().iter().flat_map(|&i| [i, i]).collect();
                ensure(
                    replay2(&twice, m, Bicharge::new(0, 0)) == Some(pair.clone()),
                    || format!("doubled path of {lambda} does not give (λ, λ) at e = {e}"),
                )?;
                let split: ResiduePath = path.residues().iter().flat_map(|&i| [i, i + e]).collect();
                ensure(
                    replay2(&split, doubled, Bicharge::new(0, e as i64)) == Some(pair),
                    || {
                        format!(
                            "split path of {lambda} does not give (λ, λ) at 2e = {}",
                            2 * e
                        )
                    },
                )?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_level2_mullineux(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for n in 0..=n_max {
            for d in 0..e as i64 {
                let s = Bicharge::new(0, d);
                let source = very_dominant_representative(s, n, m);
                let target = very_dominant_representative(s.negated(), n, m);
                let step = e as i64;
                for b in enumerate_bipartitions(n).filter(|b| is_kleshchev(b, m, s)) {
                    let image = mullineux_level2(&b, m, s).map_err(|e| e.to_string())?;
                    let expected = componentwise_mullineux(&b, m).map_err(|e| e.to_string())?;
                    ensure(image == expected, || {
                        format!("M({b}) = {image} but componentwise gives {expected}, e = {e}")
                    })?;
                    let other =
                        mullineux_level2_at(&b, m, source.shifted(step), target.shifted(2 * step))
                            .map_err(|e| e.to_string())?;
                    ensure(other == image, || {
                        format!("M({b}) depends on the representatives")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

pub fn check_isop(n_max: usize) -> Check {
    let mut cases = 0;
    for &e in &MODULI {
        let m = modulus(e);
        for n in 0..=n_max {
            for lambda in enumerate_e_regular(n, m) {
                let pair = Bipartition::doubled(&lambda);
                let wide = psi_tilde(m.doubled(), Bicharge::new(0, e as i64), &pair)
                    .map_err(|e| e.to_string())?;
                let narrow = psi_tilde(m, Bicharge::new(0, 0), &pair).map_err(|e| e.to_string())?;
                ensure(wide == narrow, || {
                    format!("ψ̃ at 2e gives {wide}, at e gives {narrow}, for {lambda}, e = {e}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn check_enumeration_counts(n_max: usize) -> Check {
    let mut cases = 0;
    for n in 0..=n_max {
        let all: Vec<Partition> = enumerate_partitions(n).collect();
        ensure(all.len() as u64 == partition_count(n), || {
            format!("p({n}) mismatch")
        })?;
        ensure(all.windows(2).all(|w| w[0].parts() > w[1].parts()), || {
            format!("partitions of {n} are not in reverse lexicographic order")
        })?;
        for &e in &MODULI {
            let regular = enumerate_e_regular(n, modulus(e)).count() as u64;
            ensure(regular == glaisher_count(n, e), || {
                format!("{e}-regular count of {n} mismatch")
            })?;
        }
        cases += 1;
    }
    Ok(cases)
}
