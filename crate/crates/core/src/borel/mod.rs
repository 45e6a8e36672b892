//! Borel-type (weakly stable) monomial ideals.
//!
//! A monomial ideal `I` is of Borel type when `(I : x_j^∞) = (I : (x_1..x_j)^∞)`
//! for every `j`. This module decides that property three independent ways:
//!
//! * [`is_borel_definitional`] compares the two saturations directly;
//! * [`is_borel_exchange`] checks the exchange condition on minimal generators;
//! * [`is_borel_by_truncation`] looks for a stable truncation `I_{≥e}`, which
//!   exists exactly for Borel-type ideals.
//!
//! A fourth route, through the generator structure, lives in [`structure`].
//!
//! The truncation search also yields the Castelnuovo–Mumford regularity: for
//! Borel-type `I`, `reg(I)` is the least `e ≥ deg(I)` with `I_{≥e}` stable,
//! and it never exceeds `m(I)(deg(I) - 1) + 1`.

pub mod primes;
pub mod random;
pub mod structure;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// Below this many generators the stability check stays on one thread.
const PARALLEL_STABILITY_THRESHOLD: usize = 512;

/// Checks `(I : x_j^∞) = (I : (x_1, ..., x_j)^∞)` for every `j`.
pub fn is_borel_definitional(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.ensure_proper_nonzero()?;
    let ctx = ideal.ctx();
    for j in 1..=ctx.n() {
        let by_variable = ideal.saturate_monomial(&ctx.var(j)?)?;
        let by_prefix = ideal.saturate_ideal(&MonomialIdeal::prefix(ctx, j)?)?;
        if by_variable != by_prefix {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One instance of the exchange condition: for the generator `u` and
/// `j < m(u)`, the smallest `t > 0` with `x_j^t · u / x_{m(u)}^{ν} ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub generator: Monomial,
    pub j: usize,
    /// `None` when no such `t` exists.
    pub t: Option<u32>,
}

/// Saturations `(I : x_j^∞)` for `j = 1..n-1`, indexed by `j - 1`.
fn variable_saturations(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    let ctx = ideal.ctx();
    (1..ctx.n())
        .map(|j| ideal.saturate_monomial(&ctx.var(j)?))
        .collect()
}

/// The exchange criterion reduced to `m(u)`, checked on `G(I)`.
///
/// The existential `t` is decided exactly: `x_j^t w ∈ I` for some `t` iff
/// `w ∈ (I : x_j^∞)`.
pub fn is_borel_exchange(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.ensure_proper_nonzero()?;
    let sats = variable_saturations(ideal)?;
    for u in ideal.gens() {
        let top = u.max_index();
        let stripped = u.strip_variable(top);
        for j in 1..top {
            if !sats[j - 1].contains(&stripped) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every instance of the exchange condition on `G(I)`, with concrete
/// exponents found by forward search.
///
/// The search stops at `max_exponent(G(I)) · n + deg(I)`; a `None` means the
/// condition fails, which agrees with the saturation test.
pub fn exchange_witnesses(ideal: &MonomialIdeal) -> Result<Vec<ExchangeWitness>> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.ctx().n() as u32;
    let cap = ideal.max_exponent() * n + ideal.deg()?;
    let mut out = Vec::new();
    for u in ideal.gens() {
        let top = u.max_index();
        let stripped = u.strip_variable(top);
        for j in 1..top {
            let mut probe = stripped.clone();
            let mut found = None;
            for t in 1..=cap {
                probe = probe.times_var_power(j, 1)?;
                if ideal.contains(&probe) {
                    found = Some(t);
                    break;
                }
            }
            out.push(ExchangeWitness {
                generator: u.clone(),
                j,
                t: found,
            });
        }
    }
    Ok(out)
}

fn generator_is_stable(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    let top = u.max_index();
    if top < 2 {
        return true;
    }
    let lowered = u
        .div(&ideal.ctx().var(top).expect("top is a valid index"))
        .expect("x_top divides u");
    (1..top).all(|j| {
        let moved = lowered.times_var_power(j, 1).expect("degree unchanged");
        ideal.contains(&moved)
    })
}

/// Stability: for every generator `u` and `j < m(u)`, `x_j · u / x_{m(u)} ∈ I`.
pub fn is_stable(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::DegenerateIdeal("zero ideal"));
    }
    let gens = ideal.gens();
    Ok(if gens.len() >= PARALLEL_STABILITY_THRESHOLD {
        gens.par_iter().all(|u| generator_is_stable(ideal, u))
    } else {
        gens.iter().all(|u| generator_is_stable(ideal, u))
    })
}

/// `m(I) · (deg(I) - 1) + 1`, the a priori regularity bound for Borel-type ideals.
pub fn regularity_bound(ideal: &MonomialIdeal) -> Result<u32> {
    let deg = ideal.deg()?;
    let m = ideal.max_index()? as u32;
    m.checked_mul(deg.saturating_sub(1))
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruncationStep {
    pub e: u32,
    pub stable: bool,
}

/// The least `e ≥ deg(I)` with `I_{≥e}` stable, together with every degree
/// tried on the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityCertificate {
    pub reg: u32,
    pub trace: Vec<TruncationStep>,
    pub bound_used: u32,
}

/// Least `d` such that the ideal generated by `gens` (exponent vectors over
/// `x_1..x_k`) contains every monomial of degree `d` in those variables, or
/// `None` if no degree qualifies. A full slice in degree `d` stays full in
/// every higher degree.
fn full_slice_degree(gens: &[Vec<u32>], k: usize) -> Option<u32> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Some(0);
    }
    if k == 0 {
        return Some(1);
    }
    let last = k - 1;
    let a = gens
        .iter()
        .filter(|g| g[..last].iter().all(|&e| e == 0))
        .map(|g| g[last])
        .min()?;
    // Monomials x_k^c·w with w free of x_k: for each c < a, w must lie in
    // (K : x_k^c) restricted to x_1..x_{k-1}. That ideal only changes where c
    // reaches an exponent of x_k, so the last c of each run decides.
    let mut cuts: Vec<u32> = gens.iter().map(|g| g[last]).filter(|&b| b < a).collect();
    cuts.push(a);
    cuts.sort_unstable();
    cuts.dedup();
    let mut worst = 0;
    for &end in cuts.iter().filter(|&&c| c > 0) {
        let c = end - 1;
        let sub: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| g[last] <= c)
            .map(|g| g[..last].to_vec())
            .collect();
        let t = full_slice_degree(&sub, last)?;
        if t > 0 {
            worst = worst.max(c + t);
        }
    }
    Some(worst)
}

/// The least `e ≥ deg(I)` with `I_{≥e}` stable, or `None` if there is none.
///
/// No truncation is built. A degree-`e` monomial of `I` is `u = g·w` with
/// `g ∈ G(I)`. When `m(w) ≥ m(g)` every move `x_j u / x_{m(u)}` is still a
/// multiple of `g`. Otherwise the move is `h·w` with `h = x_j g / x_{m(g)}`,
/// so `I_{≥e}` is stable iff every monomial of degree `e - deg(g)` in
/// `x_1..x_{m(g)-1}` lies in `(I : h)`, for every `g` and `j < m(g)`.
pub fn least_stable_truncation(ideal: &MonomialIdeal) -> Result<Option<u32>> {
    ideal.ensure_proper_nonzero()?;
    let mut least = ideal.deg()?;
    for g in ideal.gens() {
        let m = g.max_index();
        for j in 1..m {
            let mut exps = g.exponents().to_vec();
            exps[m - 1] -= 1;
            exps[j - 1] += 1;
            let colon = ideal.colon_monomial(&Monomial::new(exps)?)?;
            let sub: Vec<Vec<u32>> = colon
                .gens()
                .iter()
                .filter(|k| k.max_index() < m)
                .map(|k| k.exponents()[..m - 1].to_vec())
                .collect();
            let Some(t) = full_slice_degree(&sub, m - 1) else {
                return Ok(None);
            };
            least = least.max(g.degree().checked_add(t).ok_or(Error::Overflow)?);
        }
    }
    Ok(Some(least))
}

/// Same answer as `is_stable(&ideal.truncation(e)?)` without materializing
/// the degree-`e` slice.
pub fn truncation_is_stable(ideal: &MonomialIdeal, e: u32) -> Result<bool> {
    let deg = ideal.deg()?;
    if e < deg {
        return Err(Error::TruncationBelowDegree { e, deg });
    }
    Ok(least_stable_truncation(ideal)?.is_some_and(|t| e >= t))
}

/// Castelnuovo–Mumford regularity of a Borel-type ideal.
///
/// Scans `e` upward from `deg(I)` and records each stability verdict. Fails
/// with [`Error::NotBorelType`] when no truncation up to the bound is
/// stable; a stable truncation exists for every Borel-type ideal and for no
/// other.
pub fn regularity(ideal: &MonomialIdeal) -> Result<RegularityCertificate> {
    ideal.ensure_proper_nonzero()?;
    let deg = ideal.deg()?;
    let bound = regularity_bound(ideal)?.max(deg);
    let least = least_stable_truncation(ideal)?;
    let mut trace = Vec::new();
    for e in deg..=bound {
        let stable = least.is_some_and(|t| e >= t);
        trace.push(TruncationStep { e, stable });
        if stable {
            return Ok(RegularityCertificate {
                reg: e,
                trace,
                bound_used: bound,
            });
        }
    }
    Err(Error::NotBorelType(format!(
        "no stable truncation I_{{>=e}} for e in [{deg}, {bound}]"
    )))
}

/// Borel type decided by the existence of a stable truncation.
pub fn is_borel_by_truncation(ideal: &MonomialIdeal) -> Result<bool> {
    match regularity(ideal) {
        Ok(_) => Ok(true),
        Err(Error::NotBorelType(_)) => Ok(false),
        Err(e) => Err(e),
    }
}
