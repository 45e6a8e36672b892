//! Associated primes of monomial ideals, computed two independent ways.
//!
//! Every associated prime of `S/I` is generated by variables, so it is stored
//! as its set of 1-based variable indices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::ring::{divisors, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct AssociatedPrimeSet {
    pub primes: BTreeSet<Vec<usize>>,
}

impl AssociatedPrimeSet {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Splits `gens` until every piece is generated by pure powers. Each piece
/// is returned as the exponent vector of its pure powers (0 = variable absent).
fn irreducible_pieces(gens: Vec<Monomial>, out: &mut BTreeSet<Vec<u32>>) -> Result<()> {
    let gens = minimalize(gens);
    let mixed = gens.iter().position(|g| g.pure_power_index().is_none());
    let Some(pos) = mixed else {
        let n = gens.first().map_or(0, Monomial::len);
        let mut exps = vec![0u32; n];
        for g in &gens {
            let i = g.pure_power_index().expect("all pure powers");
            exps[i - 1] = g.exponent(i);
        }
        out.insert(exps);
        return Ok(());
    };

    // (J, x_i^a h) = (J, x_i^a) ∩ (J, h) for h coprime to x_i
    let g = &gens[pos];
    let i = g.support()[0];
    let power = {
        let mut exps = vec![0u32; g.len()];
        exps[i - 1] = g.exponent(i);
        Monomial::new(exps)?
    };
    let rest = g.div(&power)?;
    let others: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != pos)
        .map(|(_, u)| u.clone())
        .collect();

    let mut left = others.clone();
    left.push(power);
    irreducible_pieces(left, out)?;
    let mut right = others;
    right.push(rest);
    irreducible_pieces(right, out)
}

/// `Q_a ⊆ Q_b` for irreducible ideals given by pure-power exponent vectors.
fn irreducible_contained(a: &[u32], b: &[u32]) -> bool {
    a.iter()
        .zip(b)
        .all(|(&ea, &eb)| ea == 0 || (eb > 0 && eb <= ea))
}

/// The irredundant irreducible decomposition of `I`, each component as its
/// pure-power exponent vector.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<Vec<u32>>> {
    ideal.ensure_proper_nonzero()?;
    let mut pieces = BTreeSet::new();
    irreducible_pieces(ideal.gens().to_vec(), &mut pieces)?;
    let pieces: Vec<Vec<u32>> = pieces.into_iter().collect();
    let keep = pieces
        .iter()
        .filter(|c| {
            !pieces
                .iter()
                .any(|other| other != *c && irreducible_contained(other, c))
        })
        .cloned()
        .collect();
    Ok(keep)
}

/// `Ass(S/I)` as the radicals of the irredundant irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<AssociatedPrimeSet> {
    let primes = irreducible_decomposition(ideal)?
        .into_iter()
        .map(|exps| {
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, _)| k + 1)
                .collect()
        })
        .collect();
    Ok(AssociatedPrimeSet { primes })
}

/// `Ass(S/I)` by searching witnesses: every associated prime is `(I : u)` for
/// some monomial `u` dividing `lcm(G(I))`.
///
/// `budget` caps the number of candidate monomials.
pub fn associated_primes_by_witness(
    ideal: &MonomialIdeal,
    budget: u64,
) -> Result<AssociatedPrimeSet> {
    ideal.ensure_proper_nonzero()?;
    let lcm = ideal.gens_lcm();
    let required: u128 = lcm.exponents().iter().map(|&e| e as u128 + 1).product();
    if required > budget as u128 {
        return Err(Error::BudgetExceeded {
            required,
            cap: budget,
        });
    }
    let mut primes = BTreeSet::new();
    for u in divisors(&lcm) {
        if ideal.contains(&u) {
            continue;
        }
        let colon = ideal.colon_monomial(&u)?;
        if colon.gens().iter().all(|g| g.degree() == 1) {
            // canonical order lists x_1 before x_2 ..., so indices come out sorted
            primes.insert(colon.gens().iter().map(Monomial::max_index).collect());
        }
    }
    Ok(AssociatedPrimeSet { primes })
}

/// True iff every prime is `(x_1, ..., x_r)` for some `r`.
pub fn check_initial_segment(primes: &AssociatedPrimeSet) -> bool {
    primes
        .primes
        .iter()
        .all(|p| !p.is_empty() && p.iter().enumerate().all(|(k, &i)| i == k + 1))
}
