//! Multiprecision modular arithmetic and the primality, order and trace
//! machinery every other module consumes.
//!
//! All operations are pure functions of their inputs; every value is immutable
//! and safe to share across threads.

mod factorize;
mod order;
mod primality;
mod sieve;

pub use factorize::{factorize, EffortBudget, Factorization};
pub use order::{
    order_of_two, order_of_two_given_phi_factors, order_of_two_with_effort, residue_trace,
    OrderInfo, ResidueTrace,
};
pub use primality::{lucas_lehmer, pepin_test, probable_prime, proth_test, DEFAULT_MR_ROUNDS};
pub use sieve::{for_each_prime_in_range, primes_in_range, sieve_primes};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default operand ceiling, in bits. Large enough for F_20 and all desk-scale
/// work; anything bigger is refused with [`Error::Resource`].
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 21;

/// Checks an operand against a bit budget, refusing loudly instead of
/// truncating.
pub fn check_bits(needed: u64, budget: u64) -> Result<()> {
    if needed > budget {
        Err(Error::Resource { needed, budget })
    } else {
        Ok(())
    }
}

/// An integer reduced modulo an explicit modulus; 0 <= value < modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    value: BigUint,
    modulus: BigUint,
}

impl Residue {
    pub fn new(value: BigUint, modulus: BigUint) -> Result<Self> {
        if modulus < BigUint::from(2u32) {
            return Err(Error::domain(format!("modulus {modulus} must be >= 2")));
        }
        Ok(Residue {
            value: value % &modulus,
            modulus,
        })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// True when the residue equals modulus - 1, i.e. -1 in the ring.
    pub fn is_minus_one(&self) -> bool {
        self.value == &self.modulus - 1u32
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }
}

/// A number k * 2^m + 1 with k odd, the shape of every known Fermat factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProthCandidate {
    k: u64,
    m: u32,
}

impl ProthCandidate {
    pub fn new(k: u64, m: u32) -> Result<Self> {
        if k == 0 || k % 2 == 0 {
            return Err(Error::domain(format!("Proth k must be odd and positive, got {k}")));
        }
        if m == 0 {
            return Err(Error::domain("Proth m must be positive"));
        }
        Ok(ProthCandidate { k, m })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// k * 2^m + 1, computed exactly.
    pub fn value(&self) -> BigUint {
        (BigUint::from(self.k) << self.m) + 1u32
    }

    /// The Proth condition k < 2^m, under which the deterministic test applies.
    pub fn proth_condition(&self) -> bool {
        self.m >= 64 || self.k < (1u64 << self.m)
    }
}

/// Evidence attached to a primality verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// A proper divisor d with 1 < d < n and d | n.
    Divisor(BigUint),
    /// A base whose Fermat/Euler behaviour proves compositeness.
    WitnessBase(BigUint),
    /// The final residue of a deterministic test (Pépin, Proth, Lucas-Lehmer).
    FinalResidue(BigUint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Prime,
    Composite,
    Undetermined,
}

/// Outcome of a primality test, with the witness or residue that justifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub status: Verdict,
    /// Name of the test that produced the verdict.
    pub test: &'static str,
    pub evidence: Option<Evidence>,
}

impl PrimalityVerdict {
    pub fn prime(test: &'static str, evidence: Option<Evidence>) -> Self {
        PrimalityVerdict {
            status: Verdict::Prime,
            test,
            evidence,
        }
    }

    pub fn composite(test: &'static str, evidence: Evidence) -> Self {
        PrimalityVerdict {
            status: Verdict::Composite,
            test,
            evidence: Some(evidence),
        }
    }

    pub fn undetermined(test: &'static str) -> Self {
        PrimalityVerdict {
            status: Verdict::Undetermined,
            test,
            evidence: None,
        }
    }

    pub fn is_prime(&self) -> bool {
        self.status == Verdict::Prime
    }

    pub fn is_composite(&self) -> bool {
        self.status == Verdict::Composite
    }
}

/// base^exponent mod modulus via square-and-multiply; O(len(exponent))
/// modular squarings.
pub fn mod_pow(base: &BigUint, exponent: &BigUint, modulus: &BigUint) -> Result<Residue> {
    if *modulus < BigUint::from(2u32) {
        return Err(Error::domain(format!("modulus {modulus} must be >= 2")));
    }
    if exponent.is_zero() {
        return Residue::new(BigUint::one(), modulus.clone());
    }
    Residue::new(base.modpow(exponent, modulus), modulus.clone())
}
