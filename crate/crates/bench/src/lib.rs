//! Fixed workloads shared by the benchmarks.

use borelkit::{random_borel, random_ideal, BorelBudget, MonomialIdeal, RingContext};

/// Seeded Borel-type ideals in `n` variables with all stratum sizes equal to
/// `stratum`.
pub fn borel_fixtures(n: usize, stratum: usize, count: u64) -> Vec<MonomialIdeal> {
    let ctx = RingContext::new(n).expect("n >= 2");
    let budget = BorelBudget {
        q: 1,
        max_exponent: 3,
        stratum_sizes: vec![stratum; n],
    };
    (0..count)
        .map(|seed| random_borel(&ctx, &budget, seed).expect("feasible budget"))
        .collect()
}

/// Seeded ideals with no imposed structure.
pub fn arbitrary_fixtures(n: usize, count: u64) -> Vec<MonomialIdeal> {
    let ctx = RingContext::new(n).expect("n >= 2");
    (0..count)
        .map(|seed| random_ideal(&ctx, 5, 4, seed))
        .collect()
}
