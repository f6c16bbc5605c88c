//! Multiplicative order of 2 and the repeated-squaring residue trace.
//!
//! These are the two faces of the same question: an odd prime p divides some
//! Fermat number exactly when the order of 2 mod p is a power of two, and the
//! trace 2, 2^2, 2^4, ... (mod p) hits -1 at step r exactly when p | F_r.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{factorize, mod_pow, probable_prime, EffortBudget, Residue, DEFAULT_MR_ROUNDS};
use crate::error::{Error, Result};

/// The multiplicative order of 2 mod p, plus the Fermat index it implies when
/// the order is a power of two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderInfo {
    pub order: BigUint,
    /// Some(n) iff order = 2^(n+1), in which case p | F_n.
    pub fermat_index: Option<u64>,
}

impl OrderInfo {
    pub fn is_power_of_two(&self) -> bool {
        self.order.count_ones() == 1
    }
}

/// Order of 2 mod p for an odd prime p, computed by factoring p - 1 and
/// descending through its divisors.
pub fn order_of_two(p: &BigUint) -> Result<OrderInfo> {
    order_of_two_with_effort(p, &EffortBudget::default())
}

pub fn order_of_two_with_effort(p: &BigUint, effort: &EffortBudget) -> Result<OrderInfo> {
    if p.is_even() || p.is_one() {
        return Err(Error::domain(format!("order of 2 needs an odd prime, got {p}")));
    }
    if !probable_prime(p, DEFAULT_MR_ROUNDS)?.is_prime() {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let phi = p - 1u32;
    let f = factorize(&phi, effort)?;
    if !f.is_complete() {
        return Err(Error::EffortExhausted {
            cofactor: f.cofactor.unwrap(),
        });
    }
    let two = BigUint::from(2u32);
    let mut order = phi.clone();
    for (q, _) in &f.factors {
        while (&order % q).is_zero() {
            let candidate = &order / q;
            if mod_pow(&two, &candidate, p)?.is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    let fermat_index = if order.count_ones() == 1 && order.bits() >= 2 {
        Some(order.bits() - 2) // order = 2^(n+1)
    } else {
        None
    };
    Ok(OrderInfo { order, fermat_index })
}

/// Known p-1 factorization variant: for p = k*2^m + 1 the caller already
/// knows the factors of p - 1, so no factorization effort is spent.
pub fn order_of_two_given_phi_factors(p: &BigUint, phi_factors: &[(BigUint, u32)]) -> Result<OrderInfo> {
    let two = BigUint::from(2u32);
    let phi = p - 1u32;
    let mut order = phi.clone();
    for (q, _) in phi_factors {
        while (&order % q).is_zero() {
            let candidate = &order / q;
            if mod_pow(&two, &candidate, p)?.is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    let fermat_index = if order.count_ones() == 1 && order.bits() >= 2 {
        Some(order.bits() - 2)
    } else {
        None
    };
    Ok(OrderInfo { order, fermat_index })
}

/// The repeated-squaring sequence 2, 2^2, 2^4, ... mod p, stopped at the
/// first -1 (hit), at a repeated value (no hit possible), or at `max_steps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTrace {
    pub p: BigUint,
    pub sequence: Vec<Residue>,
    /// r such that 2^(2^r) == -1 (mod p), proving p | F_r.
    pub hit_index: Option<u64>,
    /// True when the trace stopped because a value repeated.
    pub cycled: bool,
}

pub fn residue_trace(p: &BigUint, max_steps: u64) -> Result<ResidueTrace> {
    if p.is_even() || p.is_one() {
        return Err(Error::domain(format!("residue trace needs an odd prime, got {p}")));
    }
    if max_steps == 0 {
        return Err(Error::domain("max_steps must be >= 1"));
    }
    let minus_one = p - 1u32;
    let mut seen: HashSet<BigUint> = HashSet::new();
    let mut sequence = Vec::new();
    let mut value = BigUint::from(2u32) % p;
    let mut hit_index = None;
    let mut cycled = false;
    for i in 0..max_steps {
        sequence.push(Residue::new(value.clone(), p.clone())?);
        if value == minus_one {
            hit_index = Some(i);
            break;
        }
        if !seen.insert(value.clone()) {
            cycled = true;
            sequence.pop(); // the repeat adds no information
            break;
        }
        value = (&value * &value) % p;
    }
    Ok(ResidueTrace {
        p: p.clone(),
        sequence,
        hit_index,
        cycled,
    })
}
