//! The Chebyshev ψ function over progressions and the second moment of its
//! increments, the quantity the GRH-conditional bound controls.

use std::collections::BTreeMap;

use serde::Serialize;

use super::CongruenceClass;
use crate::error::{Error, Result};
use crate::ntkernel::for_each_prime_in_range;

/// ψ(y, q, a) = Σ Λ(n) over n <= y with n == a (mod q), where Λ(n) = log p
/// for prime powers p^j and 0 otherwise.
pub fn chebyshev_psi(y: u64, class: &CongruenceClass, budget: u64) -> Result<f64> {
    if y > budget {
        return Err(Error::Resource { needed: y, budget });
    }
    let mut sum = 0.0f64;
    for_each_prime_in_range(2, y, |p| {
        let logp = (p as f64).ln();
        let mut power = p;
        loop {
            if class.contains(power) {
                sum += logp;
            }
            match power.checked_mul(p) {
                Some(next) if next <= y => power = next,
                _ => break,
            }
        }
    });
    Ok(sum)
}

/// Parameters for the second-moment evaluation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SecondMomentParams {
    /// Base of the integration range [x, 2x].
    pub x: u64,
    /// Window length h of the ψ increments.
    pub h: u64,
    pub q: u64,
    /// Midpoint Riemann step; 1 gives the exact integral.
    pub step: u64,
    /// Relative tolerance for the per-y increment check behind the
    /// exceptional-class count.
    pub tolerance: f64,
    /// A class is exceptional when more than this fraction of sampled y
    /// fail the tolerance.
    pub fail_fraction: f64,
}

impl SecondMomentParams {
    pub fn new(x: u64, h: u64, q: u64, step: u64) -> Self {
        SecondMomentParams {
            x,
            h,
            q,
            step,
            tolerance: 0.5,
            fail_fraction: 0.1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SecondMomentReport {
    pub params: SecondMomentParams,
    /// I(x, h, q): the sum of the per-class integrals.
    pub value: f64,
    /// value / (h * x * log^2(qx)), the shape of the conditional bound.
    pub bound_ratio: f64,
    /// a -> I(x, h, q, a) over classes coprime to q.
    pub per_class: BTreeMap<u64, f64>,
    /// Classes where the increment asymptotic fails for more than
    /// `fail_fraction` of sampled y at the stated tolerance.
    pub exceptional_classes: Vec<u64>,
    /// Per class, the fraction of sampled y failing the tolerance.
    pub fail_fractions: BTreeMap<u64, f64>,
    /// Reference lower-bound curve (1/2) (xh/φ(q)) log(xq/h^3) per class;
    /// reported for comparison only, negative outside its regime.
    pub lower_reference_per_class: f64,
}

/// Numerically evaluates I(x,h,q,a) = ∫_x^{2x} (ψ(y+h,q,a) - ψ(y,q,a) -
/// h/φ(q))² dy for every coprime class a, by midpoint Riemann sum.
pub fn second_moment(params: &SecondMomentParams, budget: u64) -> Result<SecondMomentReport> {
    let SecondMomentParams { x, h, q, step, .. } = *params;
    if q == 0 {
        return Err(Error::domain("q must be >= 1"));
    }
    if h > 0 && step > h {
        return Err(Error::domain(format!("integration step {step} exceeds window h = {h}")));
    }
    if step == 0 {
        return Err(Error::domain("integration step must be >= 1"));
    }
    let top = 2 * x + h;
    if top > budget {
        return Err(Error::Resource { needed: top, budget });
    }

    let classes: Vec<u64> = (0..q).filter(|&a| num_integer::gcd(a, q) == 1).collect();
    let phi = classes.len() as f64;

    // prefix[a][i] = ψ(i, q, a); built from one Λ pass over [2, 2x + h]
    let mut prefix: BTreeMap<u64, Vec<f64>> = classes
        .iter()
        .map(|&a| (a, vec![0.0f64; (top + 2) as usize]))
        .collect();
    {
        let mut lambda: Vec<f64> = vec![0.0; (top + 2) as usize];
        for_each_prime_in_range(2, top, |p| {
            let logp = (p as f64).ln();
            let mut power = p;
            loop {
                lambda[power as usize] += logp;
                match power.checked_mul(p) {
                    Some(next) if next <= top => power = next,
                    _ => break,
                }
            }
        });
        for (&a, pref) in prefix.iter_mut() {
            let mut acc = 0.0;
            for n in 1..=top + 1 {
                if n <= top && n % q == a {
                    acc += lambda[n as usize];
                }
                pref[n as usize] = acc;
            }
        }
    }
    let psi_at = |pref: &Vec<f64>, y: f64| -> f64 {
        let idx = y.floor().max(0.0) as usize;
        pref[idx.min(pref.len() - 1)]
    };

    let mean = if h == 0 { 0.0 } else { h as f64 / phi };
    let mut per_class = BTreeMap::new();
    let mut fail_fractions = BTreeMap::new();
    let mut exceptional = Vec::new();
    let steps = x / step;
    for &a in &classes {
        let pref = &prefix[&a];
        let mut integral = 0.0f64;
        let mut failures = 0u64;
        if h > 0 {
            for j in 0..steps {
                let y = x as f64 + (j as f64 + 0.5) * step as f64;
                let inc = psi_at(pref, y + h as f64) - psi_at(pref, y);
                let dev = inc - mean;
                integral += dev * dev * step as f64;
                if (inc - mean).abs() > params.tolerance * mean {
                    failures += 1;
                }
            }
        }
        let fail_fraction = if steps > 0 { failures as f64 / steps as f64 } else { 0.0 };
        if h > 0 && fail_fraction > params.fail_fraction {
            exceptional.push(a);
        }
        per_class.insert(a, integral);
        fail_fractions.insert(a, fail_fraction);
    }
    let value: f64 = per_class.values().sum();
    let denom = h as f64 * x as f64 * ((q as f64 * x as f64).ln()).powi(2);
    let bound_ratio = if denom > 0.0 { value / denom } else { 0.0 };
    let lower_reference = if h > 0 {
        0.5 * (x as f64 * h as f64 / phi) * ((x as f64 * q as f64) / (h as f64).powi(3)).ln()
    } else {
        0.0
    };
    Ok(SecondMomentReport {
        params: *params,
        value,
        bound_ratio,
        per_class,
        exceptional_classes: exceptional,
        fail_fractions,
        lower_reference_per_class: lower_reference,
    })
}
