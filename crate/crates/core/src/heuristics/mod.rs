//! Probability models for Fermat-number primality, the expectation sums
//! built on them, interval-size requirements, and the analogous
//! special-Mersenne experiments.

mod hp;
mod mersenne;
mod models;

pub use hp::{Hp, PREC};
pub use mersenne::{
    mersenne_harmonic, mersenne_is_p_full, special_mersenne_expectation, CensusEntry,
    HarmonicReport, SpecialMersenneReport,
};
pub use models::{
    expected_new_fermat_primes, fullness_ratio_prob, fullness_ratio_rational,
    hardy_wright_expectation, interval_requirement, interval_requirement_for_fermat, naive_prob,
    sieve_adjusted_prob, ExpectationReport, IntervalRequirement, Model, ProbabilityEstimate,
};
