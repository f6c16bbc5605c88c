//! K-full numbers: integers whose prime divisors are all congruent to
//! 1 (mod K), counted against the primes that are 1 (mod K) themselves.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::IntervalSpec;
use crate::error::{Error, Result};
use crate::ntkernel::{factorize, sieve_primes, EffortBudget};

/// True iff every prime divisor of n is congruent to 1 (mod K). The empty
/// divisor set makes 1 K-full by convention, which keeps the predicate
/// exactly multiplicative.
pub fn is_k_full(n: &BigUint, k: u64) -> Result<bool> {
    if k == 0 {
        return Err(Error::domain("fullness modulus K must be >= 1"));
    }
    if n.is_one() {
        return Ok(true);
    }
    let f = factorize(n, &EffortBudget::default())?;
    if !f.is_complete() {
        return Err(Error::EffortExhausted {
            cofactor: f.cofactor.unwrap(),
        });
    }
    let k = BigUint::from(k);
    let all_full = f.distinct_primes().all(|p| (p % &k).is_one());
    Ok(all_full)
}

/// Counts of K-full numbers and of primes == 1 (mod K) over one interval,
/// with their ratio.
#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub interval: IntervalSpec,
    pub k: u64,
    pub count_k_full: u64,
    pub count_primes_1_mod_k: u64,
    /// count_k_full / count_primes_1_mod_k; None when the denominator is 0.
    pub ratio: Option<f64>,
}

/// Exact count of K-full integers in the interval, via a segmented
/// divide-out sieve (every prime factor below sqrt(hi) is stripped, the
/// surviving cofactor is prime or 1).
pub fn count_k_full(interval: &IntervalSpec, k: u64, budget: u64) -> Result<u64> {
    Ok(density_report(interval, k, budget)?.count_k_full)
}

/// One pass over the interval producing both counts of the ratio at once.
pub fn density_report(interval: &IntervalSpec, k: u64, budget: u64) -> Result<DensityReport> {
    if k == 0 {
        return Err(Error::domain("fullness modulus K must be >= 1"));
    }
    interval.check_budget(budget)?;
    let lo = interval.lo();
    let hi = interval.hi();
    let len = (hi - lo + 1) as usize;
    let mut residual: Vec<u64> = (lo..=hi).collect();
    let mut full = vec![true; len];
    let mut prime = vec![false; len];
    for p in sieve_primes(hi.isqrt()) {
        let p_ok = p % k == 1;
        if p >= lo && p <= hi {
            prime[(p - lo) as usize] = true;
        }
        // strip p completely from every multiple in the window; start past p
        // itself so the base prime keeps residual == n
        let mut n = (lo.div_ceil(p) * p).max(2 * p);
        while n <= hi {
            let idx = (n - lo) as usize;
            while residual[idx] % p == 0 {
                residual[idx] /= p;
            }
            if !p_ok {
                full[idx] = false;
            }
            n = match n.checked_add(p) {
                Some(v) => v,
                None => break,
            };
        }
    }
    let mut count_k_full = 0u64;
    let mut count_primes = 0u64;
    for i in 0..len {
        let n = lo + i as u64;
        let rest = residual[i];
        if rest > 1 && rest % k != 1 {
            full[i] = false;
        }
        if n >= 1 && full[i] {
            count_k_full += 1;
        }
        // whatever survived the divide-out with residual == n has no prime
        // factor <= sqrt(hi), hence is prime
        if n >= 2 && rest == n {
            prime[i] = true;
        }
        if prime[i] && n % k == 1 {
            count_primes += 1;
        }
    }
    let ratio = if count_primes > 0 {
        Some(count_k_full as f64 / count_primes as f64)
    } else {
        None
    };
    Ok(DensityReport {
        interval: *interval,
        k,
        count_k_full,
        count_primes_1_mod_k: count_primes,
        ratio,
    })
}

/// Run the ratio measurement at one center for a descending schedule of
/// half-widths. The hypothesis K >= log log x is enforced.
pub fn kfull_ratio_experiment(
    x: u64,
    k: u64,
    r_schedule: &[u64],
    budget: u64,
) -> Result<Vec<DensityReport>> {
    let loglog = (x as f64).ln().ln();
    if (k as f64) < loglog {
        return Err(Error::domain(format!(
            "K = {k} is below log log x = {loglog:.3}; the ratio estimate needs K >= log log x"
        )));
    }
    r_schedule
        .iter()
        .map(|&r| density_report(&IntervalSpec::new(x, r)?, k, budget))
        .collect()
}
