//! The Mertens product ∏_{p<=B} (1 - 1/p)^(-1) against its classical
//! asymptote e^γ log B.

use serde::Serialize;

use crate::ntkernel::for_each_prime_in_range;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Serialize)]
pub struct MertensReport {
    pub bound: u64,
    pub product: f64,
    /// e^γ * ln(bound)
    pub reference: f64,
    pub ratio: f64,
}

/// Evaluates the product over all sieved primes up to `bound` and compares
/// against e^γ log B (natural log).
pub fn mertens_product(bound: u64) -> MertensReport {
    let mut product = 1.0f64;
    for_each_prime_in_range(2, bound, |p| {
        product *= 1.0 / (1.0 - 1.0 / p as f64);
    });
    let reference = EULER_GAMMA.exp() * (bound as f64).ln();
    MertensReport {
        bound,
        product,
        reference,
        ratio: product / reference,
    }
}
