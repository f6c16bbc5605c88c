//! Expectation experiments for Mersenne numbers M_p = 2^p - 1 whose
//! exponents p sit in a prime constellation p, ap+b.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::hp::Hp;
use crate::error::{Error, Result};
use crate::ntkernel::{lucas_lehmer, sieve_primes, Verdict};

/// Partial sum Σ_{p <= x} 1/p against the log log x + M reference curve.
#[derive(Debug, Clone, Serialize)]
pub struct HarmonicReport {
    pub x: u64,
    pub prime_count: u64,
    pub partial_sum: String,
    pub partial_sum_f64: f64,
    /// log log x + 0.2615 (the Mertens constant, truncated).
    pub reference: f64,
    pub ratio: f64,
}

/// The divergent Σ 1/p, summed exactly at 256-bit precision over sieved
/// primes.
pub fn mersenne_harmonic(x: u64) -> Result<HarmonicReport> {
    if x < 2 {
        return Err(Error::domain("need x >= 2 so the sum is nonempty"));
    }
    let mut hp = Hp::new();
    let mut sum = hp.from_u64(0);
    let primes = sieve_primes(x);
    let one = hp.from_u64(1);
    for &p in &primes {
        let term = hp.div(&one, &hp.from_u64(p));
        sum = hp.add(&sum, &term);
    }
    let reference = (x as f64).ln().ln() + 0.2615;
    let partial_sum_f64 = hp.to_f64(&sum);
    Ok(HarmonicReport {
        x,
        prime_count: primes.len() as u64,
        partial_sum: hp.decimal(&sum),
        partial_sum_f64,
        reference,
        ratio: partial_sum_f64 / reference,
    })
}

/// One census member: a prime p <= X with ap+b also prime, and the
/// Lucas-Lehmer verdict on M_p when it was cheap enough to run.
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub p: u64,
    pub companion: u64,
    /// "prime" / "composite" for tested exponents, "untested" beyond the
    /// Lucas-Lehmer cutoff, "excluded" never appears here.
    pub mersenne_status: &'static str,
}

/// Census of a special-Mersenne family plus its bounded expectation sum.
#[derive(Debug, Clone, Serialize)]
pub struct SpecialMersenneReport {
    pub a: u64,
    pub b: i64,
    pub x: u64,
    pub census: Vec<CensusEntry>,
    /// Primes p skipped because p divides b, where ap+b is prime only by
    /// degeneracy.
    pub excluded: Vec<u64>,
    pub count: u64,
    /// count / (X / log² X), the sieve-bound shape.
    pub sieve_shape_ratio: f64,
    /// Σ 1/(ap+b) over the census.
    pub expectation_sum: String,
    pub expectation_sum_f64: f64,
    pub mersenne_primes_found: Vec<u64>,
    pub lucas_lehmer_cutoff: u64,
}

fn is_prime_u64(n: u64, primes: &[u64]) -> bool {
    if n < 2 {
        return false;
    }
    for &p in primes {
        if p * p > n {
            break;
        }
        if n % p == 0 {
            return n == p;
        }
    }
    true
}

/// Enumerates primes p <= X with ap+b prime, sums 1/(ap+b), and runs
/// Lucas-Lehmer on M_p up to `ll_cutoff`. p = 2 is carried when both sides
/// are prime even though M_2 = 3 is outside the odd-exponent test; it is
/// reported as untested.
pub fn special_mersenne_expectation(
    a: u64,
    b: i64,
    x: u64,
    ll_cutoff: u64,
) -> Result<SpecialMersenneReport> {
    if a == 0 {
        return Err(Error::domain(
            "a = 0 makes ap+b constant; the family is degenerate",
        ));
    }
    if x < 2 {
        return Err(Error::domain("need X >= 2"));
    }
    let companion_max = a
        .checked_mul(x)
        .and_then(|ax| ax.checked_add_signed(b))
        .ok_or_else(|| Error::domain("a·X + b overflows"))?;
    let trial = sieve_primes(companion_max.isqrt() + 1);
    let mut hp = Hp::new();
    let one = hp.from_u64(1);
    let mut census = Vec::new();
    let mut excluded = Vec::new();
    let mut sum = hp.from_u64(0);
    let mut mersenne_primes = Vec::new();
    for p in sieve_primes(x) {
        // (b, p) = 1 is required by the model; p | b makes ap+b == 0 (mod p)
        if b != 0 && (b.unsigned_abs() % p == 0) {
            excluded.push(p);
            continue;
        }
        let companion = match (a * p).checked_add_signed(b) {
            Some(c) => c,
            None => continue,
        };
        if !is_prime_u64(companion, &trial) {
            continue;
        }
        let status = if p == 2 {
            "untested"
        } else if p <= ll_cutoff {
            match lucas_lehmer(p)?.status {
                Verdict::Prime => {
                    mersenne_primes.push(p);
                    "prime"
                }
                _ => "composite",
            }
        } else {
            "untested"
        };
        sum = hp.add(&sum, &hp.div(&one, &hp.from_u64(companion)));
        census.push(CensusEntry {
            p,
            companion,
            mersenne_status: status,
        });
    }
    let count = census.len() as u64;
    let log_x = (x as f64).ln();
    let sieve_shape_ratio = count as f64 / (x as f64 / (log_x * log_x));
    Ok(SpecialMersenneReport {
        a,
        b,
        x,
        census,
        excluded,
        count,
        sieve_shape_ratio,
        expectation_sum: hp.decimal(&sum),
        expectation_sum_f64: hp.to_f64(&sum),
        mersenne_primes_found: mersenne_primes,
        lucas_lehmer_cutoff: ll_cutoff,
    })
}

/// True iff every prime divisor of M_p = 2^p - 1 is congruent to 1 (mod p);
/// immediate from 2 having order p modulo any divisor, checked here by
/// direct factorization for small p.
pub fn mersenne_is_p_full(p: u64) -> Result<bool> {
    if p < 2 {
        return Err(Error::domain("need p >= 2"));
    }
    let m = (BigUint::one() << p) - BigUint::one();
    let f = crate::ntkernel::factorize(&m, &crate::ntkernel::EffortBudget::default())?;
    if !f.is_complete() {
        return Err(Error::EffortExhausted {
            cofactor: f.cofactor.unwrap(),
        });
    }
    let p_big = BigUint::from(p);
    let full = f.distinct_primes().all(|q| (q % &p_big).is_one());
    Ok(full)
}
