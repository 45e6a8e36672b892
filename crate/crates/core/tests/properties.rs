//! Cross-checks between the Borel-type machinery and the Betti oracle on
//! seeded random ideals.

use borelkit::borel::random::{random_borel_with, random_ideal_with, rng_from_seed};
use borelkit::borel::{
    is_borel_by_truncation, is_stable, regularity, regularity_bound, truncation_is_stable,
};
use borelkit::{
    associated_primes, associated_primes_by_witness, betti_table, check_initial_segment,
    enumerate_monomials, is_borel_definitional, is_borel_exchange, is_borel_structural,
    koszul_complex, reduced_homology_dims, regularity_oracle, BorelBudget, Monomial, MonomialIdeal,
    RingContext, DEFAULT_BETTI_BUDGET,
};
use rand::Rng;

fn random_borel_sample(n: usize, max_exp: u32, rng: &mut impl Rng) -> MonomialIdeal {
    let ctx = RingContext::new(n).unwrap();
    let budget = BorelBudget::random(&ctx, max_exp, 2, rng);
    random_borel_with(&ctx, &budget, rng).unwrap()
}

fn nondegenerate(i: &MonomialIdeal) -> bool {
    !i.is_zero() && !i.is_unit()
}

#[test]
fn deciders_agree_on_random_ideals() {
    let mut rng = rng_from_seed(11);
    for round in 0..300 {
        let n = 3 + round % 2;
        let ctx = RingContext::new(n).unwrap();
        let i = if round % 2 == 0 {
            random_borel_sample(n, 3, &mut rng)
        } else {
            random_ideal_with(&ctx, 4, 4, &mut rng)
        };
        let d = is_borel_definitional(&i).unwrap();
        assert_eq!(d, is_borel_exchange(&i).unwrap(), "{i}");
        assert_eq!(d, is_borel_structural(&i).unwrap(), "{i}");
        assert_eq!(d, is_borel_by_truncation(&i).unwrap(), "{i}");
    }
}

#[test]
fn generator_level_exchange_suffices() {
    let mut rng = rng_from_seed(12);
    for round in 0..80 {
        let ctx = RingContext::new(3).unwrap();
        let i = if round % 2 == 0 {
            random_borel_sample(3, 3, &mut rng)
        } else {
            random_ideal_with(&ctx, 3, 3, &mut rng)
        };
        let sats: Vec<MonomialIdeal> = (1..=3)
            .map(|j| i.saturate_monomial(&ctx.var(j).unwrap()).unwrap())
            .collect();
        let top = i.deg().unwrap() + 3;
        let mut all_hold = true;
        for d in 0..=top {
            for u in enumerate_monomials(3, d)
                .into_iter()
                .filter(|u| i.contains(u))
            {
                let m = u.max_index();
                let stripped = u.strip_variable(m);
                if (1..m).any(|j| !sats[j - 1].contains(&stripped)) {
                    all_hold = false;
                }
            }
        }
        assert_eq!(all_hold, is_borel_exchange(&i).unwrap(), "{i}");
    }
}

#[test]
fn regularity_matches_oracle_on_borel_ideals() {
    let mut rng = rng_from_seed(13);
    for _ in 0..60 {
        let i = random_borel_sample(3, 3, &mut rng);
        let cert = regularity(&i).unwrap();
        let oracle = regularity_oracle(&i, DEFAULT_BETTI_BUDGET).unwrap();
        assert_eq!(cert.reg, oracle, "{i}");
        assert!(is_stable(&i.truncation(oracle).unwrap()).unwrap());
        assert!(cert.reg <= regularity_bound(&i).unwrap());
        let trace = &cert.trace;
        assert_eq!(trace[0].e, i.deg().unwrap());
        assert!(trace.windows(2).all(|w| w[1].e == w[0].e + 1));
        assert!(trace[..trace.len() - 1].iter().all(|s| !s.stable));
        assert!(trace.last().unwrap().stable);
    }
}

#[test]
fn stable_truncation_bounds_regularity_for_arbitrary_ideals() {
    let mut rng = rng_from_seed(14);
    for _ in 0..60 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_ideal_with(&ctx, 4, 3, &mut rng);
        let oracle = regularity_oracle(&i, DEFAULT_BETTI_BUDGET).unwrap();
        let deg = i.deg().unwrap();
        for e in deg..=deg + 3 {
            if is_stable(&i.truncation(e).unwrap()).unwrap() {
                assert!(oracle <= e, "{i}: reg {oracle} > stable degree {e}");
            }
        }
    }
}

#[test]
fn slice_free_stability_matches_materialized_truncation() {
    let mut rng = rng_from_seed(23);
    for round in 0..300 {
        let n = 2 + round % 3;
        let ctx = RingContext::new(n).unwrap();
        let i = if round % 2 == 0 {
            random_borel_sample(n, 3, &mut rng)
        } else {
            random_ideal_with(&ctx, 4, 4, &mut rng)
        };
        let deg = i.deg().unwrap();
        for e in deg..=deg + 5 {
            assert_eq!(
                truncation_is_stable(&i, e).unwrap(),
                is_stable(&i.truncation(e).unwrap()).unwrap(),
                "{i} at {e}"
            );
        }
    }
}

#[test]
fn stability_is_inherited_upward() {
    let mut rng = rng_from_seed(15);
    for _ in 0..60 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_ideal_with(&ctx, 4, 3, &mut rng);
        let deg = i.deg().unwrap();
        for e in deg..deg + 4 {
            if is_stable(&i.truncation(e).unwrap()).unwrap() {
                assert!(
                    is_stable(&i.truncation(e + 1).unwrap()).unwrap(),
                    "{i} at {e}"
                );
            }
        }
    }
}

#[test]
fn products_and_powers() {
    let mut rng = rng_from_seed(16);
    for _ in 0..30 {
        let i = random_borel_sample(3, 2, &mut rng);
        let j = random_borel_sample(3, 2, &mut rng);
        let (ri, rj) = (regularity(&i).unwrap().reg, regularity(&j).unwrap().reg);
        let ij = i.product(&j).unwrap();
        assert!(is_stable(&ij.truncation(ri + rj).unwrap()).unwrap());
        assert!(regularity(&ij).unwrap().reg <= ri + rj);
        let i2 = i.power(2).unwrap();
        assert!(regularity(&i2).unwrap().reg <= 2 * ri);
    }
}

#[test]
fn closure_under_operations() {
    let mut rng = rng_from_seed(17);
    for _ in 0..40 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_borel_sample(3, 3, &mut rng);
        let j = random_borel_sample(3, 3, &mut rng);
        let h = random_ideal_with(&ctx, 3, 3, &mut rng);
        for k in [
            i.sum(&j).unwrap(),
            i.intersection(&j).unwrap(),
            i.product(&j).unwrap(),
            i.colon_ideal(&h).unwrap(),
        ] {
            if nondegenerate(&k) {
                assert!(is_borel_definitional(&k).unwrap(), "{k}");
            }
        }
    }
}

#[test]
fn associated_primes_of_borel_ideals_are_initial_segments() {
    let mut rng = rng_from_seed(18);
    for _ in 0..60 {
        let i = random_borel_sample(4, 3, &mut rng);
        let ass = associated_primes(&i).unwrap();
        assert_eq!(
            ass,
            associated_primes_by_witness(&i, DEFAULT_BETTI_BUDGET).unwrap(),
            "{i}"
        );
        assert!(check_initial_segment(&ass), "{i}: {ass:?}");
    }
}

#[test]
fn associated_primes_agree_on_arbitrary_ideals() {
    let mut rng = rng_from_seed(19);
    for _ in 0..60 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_ideal_with(&ctx, 4, 4, &mut rng);
        assert_eq!(
            associated_primes(&i).unwrap(),
            associated_primes_by_witness(&i, DEFAULT_BETTI_BUDGET).unwrap(),
            "{i}"
        );
    }
}

#[test]
fn zeroth_betti_numbers_count_generators() {
    let mut rng = rng_from_seed(20);
    for _ in 0..60 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_ideal_with(&ctx, 5, 4, &mut rng);
        let t = betti_table(&i, DEFAULT_BETTI_BUDGET).unwrap();
        let deg = i.deg().unwrap();
        for j in 0..=deg + 1 {
            let count = i.gens().iter().filter(|g| g.degree() == j).count() as u64;
            assert_eq!(t.get(0, j), count, "{i} degree {j}");
        }
        assert!(regularity_oracle(&i, DEFAULT_BETTI_BUDGET).unwrap() >= deg);
    }
}

fn lcm_all(gens: &[&Monomial], n: usize) -> Monomial {
    gens.iter()
        .fold(Monomial::one(n), |acc, g| acc.lcm(g).unwrap())
}

/// Σ_i (-1)^i β_{i,a} equals the Taylor-complex Euler characteristic
/// Σ_{∅≠F⊆G(I), lcm F = a} (-1)^{|F|-1}.
#[test]
fn multigraded_euler_characteristic_matches_taylor_complex() {
    let mut rng = rng_from_seed(21);
    for _ in 0..40 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_ideal_with(&ctx, 6, 4, &mut rng);
        let gens: Vec<&Monomial> = i.gens().iter().collect();
        let k = gens.len();
        let mut taylor = std::collections::HashMap::<Monomial, i64>::new();
        for mask in 1u32..(1 << k) {
            let subset: Vec<&Monomial> = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| gens[b])
                .collect();
            let sign = if subset.len() % 2 == 1 { 1 } else { -1 };
            *taylor.entry(lcm_all(&subset, 3)).or_insert(0) += sign;
        }
        for a in borelkit::ring::divisors(&i.gens_lcm()) {
            let dims = reduced_homology_dims(&koszul_complex(&i, &a).unwrap()).unwrap();
            let euler: i64 = dims
                .iter()
                .enumerate()
                .map(|(idx, &d)| if idx % 2 == 0 { d as i64 } else { -(d as i64) })
                .sum();
            assert_eq!(euler, taylor.get(&a).copied().unwrap_or(0), "{i} at {a:?}");
        }
    }
}

#[test]
fn stable_ideals_have_linear_regularity() {
    let mut rng = rng_from_seed(22);
    let mut seen = 0;
    for _ in 0..200 {
        let ctx = RingContext::new(3).unwrap();
        let i = random_ideal_with(&ctx, 5, 3, &mut rng);
        if !is_stable(&i).unwrap() {
            continue;
        }
        seen += 1;
        assert_eq!(
            regularity_oracle(&i, DEFAULT_BETTI_BUDGET).unwrap(),
            i.deg().unwrap(),
            "{i}"
        );
    }
    assert!(seen > 10, "only {seen} stable samples");
}
