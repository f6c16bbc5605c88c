//! Empirical interval statistics: prime counts in progressions, K-full
//! densities, Mertens products, Selberg windows, the ψ second moment, and the
//! balls-in-cups equidistribution simulation.
//!
//! Everything here measures; nothing here proves. Quantities that the source
//! theorems only bound asymptotically are reported with the tolerance used.

mod balls;
mod kfull;
mod mertens;
mod psi;
mod windows;

pub use balls::{balls_in_cups, BallsCupsReport};
pub use kfull::{count_k_full, density_report, is_k_full, kfull_ratio_experiment, DensityReport};
pub use mertens::{mertens_product, MertensReport, EULER_GAMMA};
pub use psi::{chebyshev_psi, second_moment, SecondMomentParams, SecondMomentReport};
pub use windows::{selberg_window_check, SelbergWindowParams, SelbergWindowReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ntkernel::for_each_prime_in_range;

/// Largest interval endpoint the segmented sieve will accept.
pub const DEFAULT_SIEVE_BUDGET: u64 = 10_000_000_000;

/// A centered window [x - r, x + r], inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub x: u64,
    pub r: u64,
}

impl IntervalSpec {
    pub fn new(x: u64, r: u64) -> Result<Self> {
        if r >= x {
            return Err(Error::domain(format!("half-width r = {r} must be smaller than center x = {x}")));
        }
        Ok(IntervalSpec { x, r })
    }

    pub fn lo(&self) -> u64 {
        self.x - self.r
    }

    pub fn hi(&self) -> u64 {
        self.x + self.r
    }

    pub fn check_budget(&self, budget: u64) -> Result<()> {
        if self.hi() > budget {
            return Err(Error::Resource {
                needed: self.hi(),
                budget,
            });
        }
        Ok(())
    }
}

/// A residue class a (mod q); for prime counting a must be coprime to q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClass {
    pub q: u64,
    pub a: u64,
}

impl CongruenceClass {
    pub fn new(q: u64, a: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::domain("modulus q must be >= 1"));
        }
        if a >= q && q > 1 {
            return Err(Error::domain(format!("residue a = {a} must satisfy 0 <= a < q = {q}")));
        }
        Ok(CongruenceClass { q, a: a % q })
    }

    pub fn contains(&self, n: u64) -> bool {
        n % self.q == self.a
    }
}

/// Exact count of primes in the interval.
pub fn count_primes(interval: &IntervalSpec, budget: u64) -> Result<u64> {
    interval.check_budget(budget)?;
    let mut count = 0u64;
    for_each_prime_in_range(interval.lo(), interval.hi(), |_| count += 1);
    Ok(count)
}

/// Exact count of primes congruent to a (mod q) in the interval.
pub fn count_primes_in_class(
    interval: &IntervalSpec,
    class: &CongruenceClass,
    budget: u64,
) -> Result<u64> {
    interval.check_budget(budget)?;
    let mut count = 0u64;
    for_each_prime_in_range(interval.lo(), interval.hi(), |p| {
        if class.contains(p) {
            count += 1;
        }
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_up_to_ten() {
        // [1, 10] centered at x from lo/hi arithmetic
        let i = IntervalSpec { x: 5, r: 4 };
        assert_eq!(count_primes(&i, DEFAULT_SIEVE_BUDGET).unwrap(), 4);
    }

    #[test]
    fn primes_one_mod_four_near_100() {
        let i = IntervalSpec::new(100, 10).unwrap();
        let c = CongruenceClass::new(4, 1).unwrap();
        // 97, 101, 109
        assert_eq!(count_primes_in_class(&i, &c, DEFAULT_SIEVE_BUDGET).unwrap(), 3);
    }

    #[test]
    fn density_matches_pnt_at_a_million() {
        let i = IntervalSpec::new(1_000_000, 10_000).unwrap();
        let count = count_primes(&i, DEFAULT_SIEVE_BUDGET).unwrap() as f64;
        let predicted = 2.0 * 10_000.0 / (1_000_000f64).ln();
        assert!((count - predicted).abs() / predicted < 0.15);
    }

    #[test]
    fn class_counts_partition_prime_count() {
        let i = IntervalSpec::new(10_000, 500).unwrap();
        for q in [1u64, 2, 3, 4, 8, 12] {
            let total: u64 = (0..q)
                .filter(|&a| num_integer::gcd(a, q) == 1 || q == 1)
                .map(|a| {
                    count_primes_in_class(&i, &CongruenceClass::new(q, a).unwrap(), DEFAULT_SIEVE_BUDGET)
                        .unwrap()
                })
                .sum();
            let mut dividing_q = 0;
            for_each_prime_in_range(i.lo(), i.hi(), |p| {
                if q % p == 0 {
                    dividing_q += 1;
                }
            });
            assert_eq!(total + dividing_q, count_primes(&i, DEFAULT_SIEVE_BUDGET).unwrap());
        }
    }

    #[test]
    fn degenerate_interval_rejected() {
        assert!(IntervalSpec::new(10, 10).is_err());
    }

    #[test]
    fn budget_refusal() {
        let i = IntervalSpec::new(1_000_000, 10).unwrap();
        assert!(matches!(count_primes(&i, 1000), Err(Error::Resource { .. })));
    }
}
