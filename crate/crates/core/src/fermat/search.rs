//! The factor-search procedure: run Proth candidates k*2^m + 1 through a
//! small-prime wheel, a Proth test, and the repeated-squaring trace, and
//! record every Fermat divisor found.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::fermat::FactorRecord;
use crate::ntkernel::{
    order_of_two_given_phi_factors, proth_test, residue_trace, sieve_primes, EffortBudget,
    ProthCandidate,
};

/// Bounds for one factor-search run.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SearchBudget {
    /// Largest odd multiplier k to try.
    pub k_max: u64,
    /// Largest exponent m to try.
    pub m_max: u32,
    /// Wheel limit: candidates with a prime factor below this are dropped
    /// before any Proth test runs.
    pub wheel_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            k_max: 1 << 16,
            m_max: 64,
            wheel_limit: 10_000,
        }
    }
}

/// Search for prime factors of F_n, n in [n_lo, n_hi], among Proth numbers
/// k*2^m + 1 with odd k <= k_max and n_lo + 2 <= m <= m_max (the Lucas lower
/// bound on m). Output is deterministic, ordered by (m, k), regardless of how
/// the work units complete. The Fermat number itself (k = 1, m = 2^n) is not
/// reported as its own factor.
pub fn factor_search(n_lo: u32, n_hi: u32, budget: &SearchBudget) -> Result<Vec<FactorRecord>> {
    if n_hi < n_lo {
        return Ok(Vec::new());
    }
    let m_lo = n_lo + 2;
    if budget.m_max < m_lo || budget.k_max == 0 {
        return Ok(Vec::new());
    }
    let wheel: Vec<u64> = sieve_primes(budget.wheel_limit)
        .into_iter()
        .skip(1) // candidates are odd by construction
        .collect();

    let per_m: Vec<Vec<FactorRecord>> = (m_lo..=budget.m_max)
        .collect::<Vec<u32>>()
        .par_iter()
        .map(|&m| search_one_exponent(m, n_lo, n_hi, budget.k_max, &wheel))
        .collect::<Result<_>>()?;
    Ok(per_m.into_iter().flatten().collect())
}

fn search_one_exponent(
    m: u32,
    n_lo: u32,
    n_hi: u32,
    k_max: u64,
    wheel: &[u64],
) -> Result<Vec<FactorRecord>> {
    // survivors[i] covers k = 2i + 1
    let slots = (k_max as usize + 1) / 2;
    let mut survives = vec![true; slots];
    for &q in wheel {
        // k*2^m + 1 == 0 (mod q)  <=>  k == -inverse(2^m) (mod q)
        let t = pow_mod_u64(2, u64::from(m), q);
        if t == 0 {
            continue;
        }
        let inv = pow_mod_u64(t, q - 2, q); // q prime, Fermat inverse
        let root = (q - inv) % q;
        // walk the odd k's in the residue class root (mod q)
        let start = if root % 2 == 1 { root } else { root + q };
        let mut k = start;
        while k <= k_max {
            // keep the candidate when it IS the wheel prime q itself
            let is_q = m < 64 && (u128::from(k) << m) + 1 == u128::from(q);
            if !is_q {
                survives[(k as usize - 1) / 2] = false;
            }
            k += 2 * q;
        }
    }

    let mut out = Vec::new();
    for (i, &alive) in survives.iter().enumerate() {
        if !alive {
            continue;
        }
        let k = 2 * i as u64 + 1;
        let candidate = ProthCandidate::new(k, m)?;
        if !proth_test(&candidate)?.is_prime() {
            continue;
        }
        let p = candidate.value();
        let trace = residue_trace(&p, u64::from(n_hi) + 1)?;
        if let Some(hit) = trace.hit_index {
            if hit >= u64::from(n_lo) && hit <= u64::from(n_hi) {
                // exclude p = F_n itself; self-divisibility is primality
                // evidence, not a factor record
                if k == 1 && hit < 63 && u64::from(m) == 1u64 << hit {
                    continue;
                }
                out.push(FactorRecord {
                    n: hit as u32,
                    k,
                    m,
                    p,
                    method: "proth-search".into(),
                    verified: true,
                    timestamp: String::new(),
                });
            }
        }
    }
    Ok(out)
}

fn pow_mod_u64(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Empirical check of the Dubner-Keller observation that a Proth prime
/// k*2^m + 1 divides some Fermat number with probability 1/k.
#[derive(Debug, Clone, Serialize)]
pub struct DubnerKellerReport {
    pub k: u64,
    pub m_lo: u32,
    pub m_hi: u32,
    /// Exponents m in range for which k*2^m + 1 is prime.
    pub prime_exponents: Vec<u32>,
    /// (m, fermat index divided) for the primes whose order of 2 is a power
    /// of two.
    pub dividers: Vec<(u32, u64)>,
    pub sample_size: usize,
    pub dividing_fraction: Option<f64>,
    pub expected_fraction: f64,
    /// Binomial standard error sqrt(p(1-p)/size) at p = 1/k.
    pub standard_error: Option<f64>,
}

/// Among Proth primes k*2^m + 1 with m in [m_lo, m_hi], the fraction that
/// divide some Fermat number, against the predicted mean 1/k. An empty
/// sample yields fractions of None.
pub fn dubner_keller_stat(k: u64, m_lo: u32, m_hi: u32) -> Result<DubnerKellerReport> {
    if k == 0 || k % 2 == 0 {
        return Err(crate::error::Error::domain(format!("k must be odd and positive, got {k}")));
    }
    let k_factors = crate::ntkernel::factorize(&BigUint::from(k), &EffortBudget::default())?;
    let mut prime_exponents = Vec::new();
    let mut dividers = Vec::new();
    for m in m_lo..=m_hi {
        if m == 0 {
            continue;
        }
        let candidate = ProthCandidate::new(k, m)?;
        if !proth_test(&candidate)?.is_prime() {
            continue;
        }
        prime_exponents.push(m);
        let p = candidate.value();
        // p - 1 = k * 2^m, so the factorization of p - 1 is known outright
        let mut phi_factors: Vec<(BigUint, u32)> = vec![(BigUint::from(2u32), m)];
        if k != 1 {
            phi_factors.extend(k_factors.factors.iter().cloned());
        }
        let order = order_of_two_given_phi_factors(&p, &phi_factors)?;
        if let Some(n) = order.fermat_index {
            dividers.push((m, n));
        }
    }
    let sample_size = prime_exponents.len();
    let expected = 1.0 / k as f64;
    let (fraction, std_err) = if sample_size > 0 {
        (
            Some(dividers.len() as f64 / sample_size as f64),
            Some((expected * (1.0 - expected) / sample_size as f64).sqrt()),
        )
    } else {
        (None, None)
    };
    Ok(DubnerKellerReport {
        k,
        m_lo,
        m_hi,
        prime_exponents,
        dividers,
        sample_size,
        dividing_fraction: fraction,
        expected_fraction: expected,
        standard_error: std_err,
    })
}
