//! Exact combinatorics of monomial ideals in `K[x_1, ..., x_n]`.
//!
//! * [`ring`]: ring contexts and monomial arithmetic;
//! * [`ideal`]: monomial ideals in canonical minimal form with sums, products,
//!   intersections, colons, saturations and truncations;
//! * [`borel`]: Borel-type deciders, stability, regularity through stable
//!   truncations, generator structure, associated primes;
//! * [`betti`]: graded Betti numbers from upper Koszul simplicial complexes,
//!   an independent source of `reg(I)`.

pub mod betti;
pub mod borel;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod ring;

pub use betti::{
    betti_table, koszul_complex, reduced_homology_dims, regularity_oracle, BettiTable,
    SimplicialComplex, DEFAULT_BETTI_BUDGET,
};
pub use borel::primes::{
    associated_primes, associated_primes_by_witness, check_initial_segment, AssociatedPrimeSet,
};
pub use borel::random::{random_borel, random_ideal, BorelBudget};
pub use borel::structure::{
    decompose_structure, is_borel_structural, validate_structure, BorelStructure, StratumEntry,
};
pub use borel::{
    exchange_witnesses, is_borel_by_truncation, is_borel_definitional, is_borel_exchange,
    is_stable, least_stable_truncation, regularity, regularity_bound, truncation_is_stable,
    ExchangeWitness, RegularityCertificate, TruncationStep,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal};
pub use ring::{enumerate_monomials, Monomial, RingContext};
