//! Trial division plus Brent's variant of Pollard rho.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{probable_prime, sieve_primes, DEFAULT_MR_ROUNDS};
use crate::error::{Error, Result};

/// How hard `factorize` tries before giving up.
#[derive(Debug, Clone, Copy)]
pub struct EffortBudget {
    /// Trial-divide by every prime up to this bound first.
    pub trial_limit: u64,
    /// Iteration cap per rho attempt.
    pub rho_iterations: u64,
    /// Distinct rho parameterizations to try before surrendering.
    pub rho_restarts: u32,
}

impl Default for EffortBudget {
    fn default() -> Self {
        EffortBudget {
            trial_limit: 1 << 20,
            rho_iterations: 1 << 22,
            rho_restarts: 8,
        }
    }
}

/// A multiset of prime factors; `cofactor` holds whatever part resisted the
/// effort budget, so an incomplete result is explicit rather than wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// (prime, multiplicity) in ascending prime order.
    pub factors: Vec<(BigUint, u32)>,
    /// Unfactored remainder, if the effort ran out.
    pub cofactor: Option<BigUint>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    /// Product of all returned factors (and the cofactor); equals the input.
    pub fn product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        if let Some(c) = &self.cofactor {
            acc *= c;
        }
        acc
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(1 << 20))
}

/// Factor n into primes with multiplicity. Every returned factor passes a
/// primality test; anything the budget cannot crack comes back as `cofactor`.
pub fn factorize(n: &BigUint, effort: &EffortBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor 0"));
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();

    for &p in small_primes() {
        if p > effort.trial_limit {
            break;
        }
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut mult = 0u32;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if r.is_zero() {
                rest = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            factors.push((bp, mult));
        }
    }

    // Whatever survives trial division gets the rho treatment.
    let mut pending = vec![rest];
    let mut cofactor: Option<BigUint> = None;
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if probable_prime(&m, DEFAULT_MR_ROUNDS)?.is_prime() {
            push_factor(&mut factors, m);
            continue;
        }
        match brent_rho(&m, effort) {
            Some(d) => {
                pending.push(&m / &d);
                pending.push(d);
            }
            None => {
                // merge multiple stuck pieces multiplicatively
                cofactor = Some(match cofactor.take() {
                    Some(c) => c * m,
                    None => m,
                });
            }
        }
    }

    factors.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(BigUint, u32)> = Vec::new();
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(Factorization {
        factors: merged,
        cofactor,
    })
}

fn push_factor(factors: &mut Vec<(BigUint, u32)>, p: BigUint) {
    factors.push((p, 1));
}

/// Brent's cycle-finding rho. The polynomial offset is derived
/// deterministically from n, so repeated runs reproduce the same factor.
fn brent_rho(n: &BigUint, effort: &EffortBudget) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    // deterministic per-n parameter stream
    let n_mod = (n % BigUint::from(0xffff_ffffu64)).to_u64_digits();
    let base_c = 1 + n_mod.first().copied().unwrap_or(0) % 1024;
    for restart in 0..effort.rho_restarts {
        let c = BigUint::from(base_c + restart as u64);
        let mut y = BigUint::from(2u64 + u64::from(restart));
        let mut iterations = 0u64;
        let m = 128u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() && iterations < effort.rho_iterations {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = m.min(r - k);
                for _ in 0..steps {
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * &diff) % n;
                }
                g = q.gcd(n);
                k += m;
                iterations += steps;
            }
            r *= 2;
        }
        if g == *n {
            // backtrack one step at a time
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}
