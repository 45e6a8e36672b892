//! Seeded random ideals: Borel-type ideals built from the generator
//! structure, and arbitrary monomial ideals for negative testing.
//!
//! All randomness comes from a ChaCha8 stream seeded with a `u64`, so a seed
//! reproduces the same ideal on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::structure::{BorelStructure, StratumEntry};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape parameters for [`random_borel`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelBudget {
    pub q: usize,
    /// Upper bound for the pure-power exponents `a_j`, the stratum exponents
    /// `a_ij`, and the individual exponents of stratum-0 and stratum-1 bases.
    pub max_exponent: u32,
    /// `(r_0, r_1, ..., r_{n-q})`.
    pub stratum_sizes: Vec<usize>,
}

impl BorelBudget {
    pub fn check(&self, ctx: &RingContext) -> Result<()> {
        let n = ctx.n();
        if self.q == 0 || self.q > n {
            return Err(Error::InfeasibleBudget(format!(
                "q = {} outside 1..={n}",
                self.q
            )));
        }
        if self.max_exponent == 0 {
            return Err(Error::InfeasibleBudget(
                "max_exponent must be positive".into(),
            ));
        }
        if self.stratum_sizes.len() != n - self.q + 1 {
            return Err(Error::InfeasibleBudget(format!(
                "expected {} stratum sizes (r_0..r_{}), got {}",
                n - self.q + 1,
                n - self.q,
                self.stratum_sizes.len()
            )));
        }
        for i in 2..self.stratum_sizes.len() {
            if self.stratum_sizes[i] > 0 && self.stratum_sizes[i - 1] == 0 {
                return Err(Error::InfeasibleBudget(format!(
                    "r_{i} > 0 needs r_{} > 0 for the chain condition",
                    i - 1
                )));
            }
        }
        Ok(())
    }

    /// A feasible budget drawn at random: `q`, then stratum sizes up to
    /// `max_stratum`, zeroing every stratum after the first empty one.
    pub fn random<R: Rng + ?Sized>(
        ctx: &RingContext,
        max_exponent: u32,
        max_stratum: usize,
        rng: &mut R,
    ) -> Self {
        let n = ctx.n();
        let q = rng.random_range(1..=n);
        let mut sizes: Vec<usize> = (0..=n - q)
            .map(|_| rng.random_range(0..=max_stratum))
            .collect();
        for i in 2..sizes.len() {
            if sizes[i - 1] == 0 {
                sizes[i] = 0;
            }
        }
        Self {
            q,
            max_exponent,
            stratum_sizes: sizes,
        }
    }
}

/// Random monomial supported on `x_1..x_k` with exponents in `0..=max`.
fn random_prefix_monomial<R: Rng + ?Sized>(n: usize, k: usize, max: u32, rng: &mut R) -> Monomial {
    let exps: Vec<u32> = (0..n)
        .map(|idx| {
            if idx < k {
                rng.random_range(0..=max)
            } else {
                0
            }
        })
        .collect();
    Monomial::new(exps).expect("small exponents")
}

/// Draws a structure satisfying the chain condition by construction.
pub fn random_structure<R: Rng + ?Sized>(
    ctx: &RingContext,
    budget: &BorelBudget,
    rng: &mut R,
) -> Result<BorelStructure> {
    budget.check(ctx)?;
    let n = ctx.n();
    let q = budget.q;
    let max = budget.max_exponent;

    let pure = (0..q).map(|_| rng.random_range(1..=max)).collect();
    let stratum0 = (0..budget.stratum_sizes[0])
        .map(|_| loop {
            let v = random_prefix_monomial(n, q, max, rng);
            if !v.is_one() {
                break v;
            }
        })
        .collect();

    let mut strata: Vec<Vec<StratumEntry>> = Vec::with_capacity(n - q);
    for i in 1..=n - q {
        let size = budget.stratum_sizes[i];
        let prefix = q + i - 1;
        let mut stratum = Vec::with_capacity(size);
        for _ in 0..size {
            let v = if i == 1 {
                random_prefix_monomial(n, prefix, max, rng)
            } else {
                let parents = &strata[i - 2];
                let parent = &parents[rng.random_range(0..parents.len())].v;
                parent.mul(&random_prefix_monomial(n, prefix, 1, rng))?
            };
            stratum.push(StratumEntry {
                v,
                a: rng.random_range(1..=max),
            });
        }
        strata.push(stratum);
    }
    Ok(BorelStructure {
        q,
        pure,
        stratum0,
        strata,
    })
}

/// A random Borel-type ideal assembled from a random structure.
///
/// Minimalizing may drop listed generators; the ideal is still of Borel type
/// since the structure generates it.
pub fn random_borel(ctx: &RingContext, budget: &BorelBudget, seed: u64) -> Result<MonomialIdeal> {
    random_borel_with(ctx, budget, &mut rng_from_seed(seed))
}

pub fn random_borel_with<R: Rng + ?Sized>(
    ctx: &RingContext,
    budget: &BorelBudget,
    rng: &mut R,
) -> Result<MonomialIdeal> {
    random_structure(ctx, budget, rng)?.assemble(ctx)
}

/// A random monomial ideal with `1..=max_gens` generators of degree
/// `1..=max_degree`. No structure is imposed.
pub fn random_ideal_with<R: Rng + ?Sized>(
    ctx: &RingContext,
    max_gens: usize,
    max_degree: u32,
    rng: &mut R,
) -> MonomialIdeal {
    let n = ctx.n();
    let count = rng.random_range(1..=max_gens.max(1));
    let raw = (0..count)
        .map(|_| {
            let d = rng.random_range(1..=max_degree.max(1));
            let mut exps = vec![0u32; n];
            for _ in 0..d {
                exps[rng.random_range(0..n)] += 1;
            }
            Monomial::new(exps).expect("small exponents")
        })
        .collect();
    MonomialIdeal::new(ctx, raw).expect("monomials built in ctx")
}

pub fn random_ideal(
    ctx: &RingContext,
    max_gens: usize,
    max_degree: u32,
    seed: u64,
) -> MonomialIdeal {
    random_ideal_with(ctx, max_gens, max_degree, &mut rng_from_seed(seed))
}
