//! Fermat-number identities, the repeated-squaring factor-search procedure,
//! list (A)/(B) classification, and the persistent factor database.

mod db;
mod search;

pub use db::{classify_lists, ClassificationReport, DbVerifyReport, FactorDatabase, FactorRecord};
pub use search::{dubner_keller_stat, factor_search, DubnerKellerReport, SearchBudget};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::Result;
use crate::ntkernel::{check_bits, probable_prime, DEFAULT_MR_ROUNDS};

/// F_n = 2^(2^n) + 1, materialized exactly. Refused when 2^n exceeds the bit
/// budget.
pub fn fermat_number(n: u32, bit_budget: u64) -> Result<BigUint> {
    if n >= 63 {
        return Err(crate::error::Error::Resource {
            needed: u64::MAX,
            budget: bit_budget,
        });
    }
    check_bits((1u64 << n) + 1, bit_budget)?;
    Ok((BigUint::one() << (1u64 << n)) + 1u32)
}

/// Checks F_{n+1} = F_0 F_1 ... F_n + 2 exactly.
pub fn recurrence_check(n: u32, bit_budget: u64) -> Result<bool> {
    let mut product = BigUint::one();
    for i in 0..=n {
        product *= fermat_number(i, bit_budget)?;
    }
    Ok(product + 2u32 == fermat_number(n + 1, bit_budget)?)
}

/// gcd(F_i, F_j) = 1 for all 0 <= i < j <= n_max.
pub fn pairwise_coprime_check(n_max: u32, bit_budget: u64) -> Result<bool> {
    let values: Vec<BigUint> = (0..=n_max)
        .map(|i| fermat_number(i, bit_budget))
        .collect::<Result<_>>()?;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if !values[i].gcd(&values[j]).is_one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which fullness theorem to check a factor against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fullness {
    /// Euler: p == 1 (mod 2^(n+1)).
    Euler,
    /// Lucas: p == 1 (mod 2^(n+2)).
    Lucas,
}

impl Fullness {
    pub fn modulus_exponent(&self, n: u32) -> u32 {
        match self {
            Fullness::Euler => n + 1,
            Fullness::Lucas => n + 2,
        }
    }
}

/// True iff p == 1 modulo 2^(n+1) (Euler) or 2^(n+2) (Lucas). The caller is
/// responsible for p being a prime divisor of F_n.
pub fn fullness_check(p: &BigUint, n: u32, strength: Fullness) -> bool {
    let modulus = BigUint::one() << strength.modulus_exponent(n);
    (p % modulus).is_one()
}

/// Primes of the form 2^j + 1 for j <= j_max; a prime of this shape forces j
/// to be 0 or a power of two. With `include_two` the prime 2 = 2^0 + 1 is
/// admitted.
pub fn fermat_t_primes(j_max: u32, include_two: bool, bit_budget: u64) -> Result<Vec<(u32, BigUint)>> {
    let mut out = Vec::new();
    for j in 0..=j_max {
        if j == 0 && !include_two {
            continue;
        }
        check_bits(u64::from(j) + 1, bit_budget)?;
        let candidate = (BigUint::one() << j) + 1u32;
        if probable_prime(&candidate, DEFAULT_MR_ROUNDS)?.is_prime() {
            out.push((j, candidate));
        }
    }
    Ok(out)
}
