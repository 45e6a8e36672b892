//! Explicit generator structure of Borel-type ideals.
//!
//! Every Borel-type ideal has minimal generators of the shape
//!
//! ```text
//! x_1^{a_1}, ..., x_q^{a_q},  v_{01}, ..., v_{0 r_0},  v_{ij} · x_{q+i}^{a_ij}  (1 ≤ i ≤ n-q)
//! ```
//!
//! with `v_0k ∈ K[x_1..x_q]`, `v_ij ∈ K[x_1..x_{q+i-1}]`, and for `i ≥ 2` every
//! `v_ij` divisible by some `v_{i-1,k}`. Conversely any ideal generated this
//! way is of Borel type.
//!
//! Only the chain condition is enforced between strata. In particular nothing
//! forces `r_{i+1} > 0` from `r_i > 0`: `(x1^2, x1*x2)` in three variables is
//! of Borel type with `(r_0, r_1, r_2) = (0, 1, 0)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumEntry {
    pub v: Monomial,
    pub a: u32,
}

/// The decomposition of `G(I)` into pure powers, stratum 0 and the strata
/// `i = 1..n-q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelStructure {
    /// Largest `j` with `x_j ∈ √I`.
    pub q: usize,
    /// `a_1..a_q`.
    pub pure: Vec<u32>,
    pub stratum0: Vec<Monomial>,
    /// `strata[i - 1]` holds the generators `u` with `m(u) = q + i`.
    pub strata: Vec<Vec<StratumEntry>>,
}

impl BorelStructure {
    /// `(r_0, r_1, ..., r_{n-q})`.
    pub fn stratum_counts(&self) -> Vec<usize> {
        std::iter::once(self.stratum0.len())
            .chain(self.strata.iter().map(Vec::len))
            .collect()
    }

    /// All listed generators, in listing order (not minimalized).
    pub fn generators(&self, ctx: &RingContext) -> Result<Vec<Monomial>> {
        let mut out = Vec::new();
        for (k, &a) in self.pure.iter().enumerate() {
            out.push(ctx.pure_power(k + 1, a)?);
        }
        out.extend(self.stratum0.iter().cloned());
        for (i, stratum) in self.strata.iter().enumerate() {
            for entry in stratum {
                out.push(entry.v.times_var_power(self.q + i + 1, entry.a)?);
            }
        }
        Ok(out)
    }

    /// The ideal generated by the listed generators.
    pub fn assemble(&self, ctx: &RingContext) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ctx, self.generators(ctx)?)
    }
}

fn chain_violation(strata: &[Vec<StratumEntry>], q: usize) -> Option<String> {
    for i in 1..strata.len() {
        for entry in &strata[i] {
            let covered = strata[i - 1]
                .iter()
                .any(|parent| parent.v.divides(&entry.v).unwrap_or(false));
            if !covered {
                return Some(format!(
                    "stratum {} entry {:?} has no divisor in stratum {} (variable x{})",
                    i + 1,
                    entry.v,
                    i,
                    q + i + 1
                ));
            }
        }
    }
    None
}

/// Reads the structure off `G(I)`.
///
/// Fails with [`Error::StructureViolation`] when a pure power below `q` is
/// missing or the chain condition breaks; either means `I` is not of Borel
/// type.
pub fn decompose_structure(ideal: &MonomialIdeal) -> Result<BorelStructure> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.ctx().n();
    let gens = ideal.gens();

    let mut pure_by_var = vec![None; n];
    for g in gens {
        if let Some(i) = g.pure_power_index() {
            pure_by_var[i - 1] = Some(g.exponent(i));
        }
    }
    let q = pure_by_var
        .iter()
        .rposition(Option::is_some)
        .map(|k| k + 1)
        .ok_or_else(|| Error::StructureViolation("no generator is a pure power".into()))?;
    let pure = pure_by_var[..q]
        .iter()
        .enumerate()
        .map(|(k, a)| {
            a.ok_or_else(|| {
                Error::StructureViolation(format!("no pure power of x{} although q = {q}", k + 1))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let stratum0 = gens
        .iter()
        .filter(|g| g.max_index() <= q && g.pure_power_index().is_none())
        .cloned()
        .collect();
    let mut strata = vec![Vec::new(); n - q];
    for g in gens {
        let top = g.max_index();
        if top > q {
            strata[top - q - 1].push(StratumEntry {
                v: g.strip_variable(top),
                a: g.exponent(top),
            });
        }
    }
    if let Some(msg) = chain_violation(&strata, q) {
        return Err(Error::StructureViolation(msg));
    }

    let structure = BorelStructure {
        q,
        pure,
        stratum0,
        strata,
    };
    if structure.assemble(ideal.ctx())? != *ideal {
        return Err(Error::Internal("decomposition does not reassemble".into()));
    }
    Ok(structure)
}

/// True iff `s` satisfies the structure conditions in `ctx`, which certifies
/// that the ideal it generates is of Borel type.
pub fn validate_structure(ctx: &RingContext, s: &BorelStructure) -> bool {
    let n = ctx.n();
    if s.q == 0 || s.q > n || s.pure.len() != s.q || s.strata.len() != n - s.q {
        return false;
    }
    if s.pure.contains(&0) {
        return false;
    }
    if s.stratum0
        .iter()
        .any(|v| v.len() != n || v.max_index() > s.q)
    {
        return false;
    }
    for (i, stratum) in s.strata.iter().enumerate() {
        let var = s.q + i + 1;
        if stratum
            .iter()
            .any(|e| e.a == 0 || e.v.len() != n || e.v.max_index() >= var)
        {
            return false;
        }
    }
    chain_violation(&s.strata, s.q).is_none()
}

/// Borel type decided through the structure: `G(I)` decomposes, the
/// decomposition validates, and it reassembles to `I`.
pub fn is_borel_structural(ideal: &MonomialIdeal) -> Result<bool> {
    match decompose_structure(ideal) {
        Ok(s) => Ok(validate_structure(ideal.ctx(), &s)),
        Err(Error::StructureViolation(_)) => Ok(false),
        Err(e) => Err(e),
    }
}
