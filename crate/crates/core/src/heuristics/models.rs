//! The probability models for the primality of F_n and the expectation sums
//! built from them.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::hp::Hp;
use crate::error::{Error, Result};
use crate::intervals::mertens_product;

/// Which density model produced an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    /// 2 / log F_n, the generic-odd estimate.
    Naive,
    /// The naive estimate times the Euler product over small primes.
    SieveAdjusted,
    /// A / log F_n, one term of the classical expectation bound.
    HardyWrightTerm,
    /// φ(2^(n+2)) / φ(2^(αn)), the progression-ratio bound.
    FullnessRatio,
}

/// One model's primality probability for F_n. Degenerate small-n values
/// above 1 are clamped, with the raw value retained.
#[derive(Debug, Clone, Serialize)]
pub struct ProbabilityEstimate {
    pub model: Model,
    pub n: u32,
    /// Clamped to [0, 1]; decimal at high precision.
    pub value: String,
    pub value_f64: f64,
    /// Unclamped model output.
    pub raw: String,
    pub raw_f64: f64,
    pub clamped: bool,
    /// Exact value as a rational, where the model admits one.
    pub exact: Option<String>,
    pub parameters: BTreeMap<String, String>,
}

/// A summed expectation of new primes under one model.
#[derive(Debug, Clone, Serialize)]
pub struct ExpectationReport {
    pub model: Model,
    pub n_lo: u32,
    /// Inclusive upper index of the partial sum.
    pub n_hi: u32,
    pub partial_sum: String,
    pub partial_sum_f64: f64,
    /// Exact rational partial sum, when the model is exact.
    pub partial_sum_exact: Option<String>,
    pub closed_form: Option<String>,
    pub closed_form_f64: Option<f64>,
    pub closed_form_exact: Option<String>,
    pub comparison: String,
    /// Whether the full-tail closed form is below 10^-9.
    pub below_one_billionth: Option<bool>,
}

fn estimate(
    hp: &mut Hp,
    model: Model,
    n: u32,
    raw: &astro_float::BigFloat,
    exact: Option<String>,
    parameters: BTreeMap<String, String>,
) -> ProbabilityEstimate {
    let one = hp.from_u64(1);
    let clamped = hp.lt(&one, raw);
    let value = if clamped { one } else { raw.clone() };
    ProbabilityEstimate {
        model,
        n,
        value: hp.decimal(&value),
        value_f64: hp.to_f64(&value),
        raw: hp.decimal(raw),
        raw_f64: hp.to_f64(raw),
        clamped,
        exact,
        parameters,
    }
}

/// The naive estimate 2 / log F_n.
pub fn naive_prob(n: u32) -> ProbabilityEstimate {
    let mut hp = Hp::new();
    let ln_f = hp.ln_fermat(n);
    let raw = hp.div(&hp.from_u64(2), &ln_f);
    estimate(&mut hp, Model::Naive, n, &raw, None, BTreeMap::new())
}

/// (2 / log F_n) * Π_{p<=B} (1 - 1/p)^(-1), together with the Mertens
/// closed form e^γ log B / log F_n.
pub fn sieve_adjusted_prob(n: u32, b: u64) -> Result<ProbabilityEstimate> {
    if b < 2 {
        return Err(Error::domain("small-divisor bound B must be >= 2"));
    }
    let mut hp = Hp::new();
    let mertens = mertens_product(b);
    let ln_f = hp.ln_fermat(n);
    let naive = hp.div(&hp.from_u64(2), &ln_f);
    let raw = hp.mul(&naive, &hp.from_f64(mertens.product));
    let closed = hp.div(
        &hp.mul(
            &hp.from_f64(crate::intervals::EULER_GAMMA.exp()),
            &hp.from_f64((b as f64).ln()),
        ),
        &ln_f,
    );
    let mut params = BTreeMap::new();
    params.insert("B".into(), b.to_string());
    params.insert("mertens_product".into(), format!("{}", mertens.product));
    params.insert("mertens_closed_form".into(), hp.decimal(&closed));
    Ok(estimate(&mut hp, Model::SieveAdjusted, n, &raw, None, params))
}

/// A Σ 1/log F_n over [n_lo, n_hi], with the classical chain of bounds
/// (A/log 2) Σ 2^-n and 3A.
pub fn hardy_wright_expectation(a: f64, n_lo: u32, n_hi: u32) -> Result<ExpectationReport> {
    if a < 0.0 {
        return Err(Error::domain("the constant A must be nonnegative"));
    }
    if n_hi < n_lo {
        return Err(Error::domain("empty index range"));
    }
    let mut hp = Hp::new();
    let a_hp = hp.from_f64(a);
    let mut sum = hp.from_u64(0);
    for n in n_lo..=n_hi {
        let ln_f = hp.ln_fermat(n);
        let term = hp.div(&a_hp, &ln_f);
        sum = hp.add(&sum, &term);
    }
    // (A / log 2) * (2^(1-n_lo) - 2^(-n_hi)) and the terminal 3A
    let ln2 = hp.ln2();
    let geometric = hp.sub(&hp.pow2(1 - n_lo as i32), &hp.pow2(-(n_hi as i32)));
    let chain = hp.mul(&hp.div(&a_hp, &ln2), &geometric);
    let three_a = hp.from_f64(3.0 * a);
    let within = hp.lt(&sum, &three_a) || a == 0.0;
    let comparison = format!(
        "partial sum {} geometric bound {}; bound 3A = {}",
        if within { "respects" } else { "VIOLATES" },
        hp.decimal(&chain),
        3.0 * a
    );
    Ok(ExpectationReport {
        model: Model::HardyWrightTerm,
        n_lo,
        n_hi,
        partial_sum: hp.decimal(&sum),
        partial_sum_f64: hp.to_f64(&sum),
        partial_sum_exact: None,
        closed_form: Some(hp.decimal(&three_a)),
        closed_form_f64: Some(3.0 * a),
        closed_form_exact: None,
        comparison,
        below_one_billionth: None,
    })
}

/// Exact rational φ(2^(n+2)) / φ(2^(αn)); for α = 2 this collapses to
/// 4/2^n. Larger α gives a smaller bound but needs a wider interval.
pub fn fullness_ratio_prob(n: u32, alpha: u32) -> Result<ProbabilityEstimate> {
    if n < 2 {
        return Err(Error::domain("the fullness ratio needs n >= 2"));
    }
    let an = alpha as u64 * n as u64;
    if an < n as u64 + 2 {
        return Err(Error::domain(format!(
            "α·n = {an} must be at least n + 2 = {}, otherwise the ratio exceeds 1",
            n + 2
        )));
    }
    // φ(2^j) = 2^(j-1)
    let numer = BigUint::one() << (n + 1);
    let denom = BigUint::one() << (an - 1);
    let ratio = BigRational::new(BigInt::from(numer), BigInt::from(denom));
    let mut hp = Hp::new();
    let raw = hp.div(&hp.from_u64(1), &hp.pow2((an - 2 - n as u64) as i32));
    let mut params = BTreeMap::new();
    params.insert("alpha".into(), alpha.to_string());
    params.insert("q".into(), format!("2^{an}"));
    params.insert("K".into(), format!("2^{}", n + 2));
    Ok(estimate(
        &mut hp,
        Model::FullnessRatio,
        n,
        &raw,
        Some(ratio.to_string()),
        params,
    ))
}

/// Exact rational 4/2^n for the fullness-ratio model at α = 2.
pub fn fullness_ratio_rational(n: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::domain("the fullness ratio needs n >= 2"));
    }
    Ok(BigRational::new(
        BigInt::from(4u32),
        BigInt::from(BigUint::one() << n),
    ))
}

/// Tail expectation Σ_{n >= n_min} of new Fermat primes under a model,
/// summed over `terms` terms against the geometric closed form.
pub fn expected_new_fermat_primes(n_min: u32, model: Model, terms: u32) -> Result<ExpectationReport> {
    if terms == 0 {
        return Err(Error::domain("need at least one term"));
    }
    let n_hi = n_min + terms - 1;
    match model {
        Model::FullnessRatio => {
            if n_min < 2 {
                return Err(Error::domain("the fullness ratio needs n >= 2"));
            }
            let mut partial = BigRational::from(BigInt::from(0));
            for n in n_min..=n_hi {
                partial += fullness_ratio_rational(n)?;
            }
            // Σ_{n>=n_min} 4/2^n = 4/2^(n_min - 1)
            let closed = BigRational::new(
                BigInt::from(4u32),
                BigInt::from(BigUint::one() << (n_min - 1)),
            );
            let billionth = BigRational::new(BigInt::from(1u32), BigInt::from(1_000_000_000u64));
            let below = closed < billionth;
            let mut hp = Hp::new();
            let partial_hp = rational_to_hp(&mut hp, &partial);
            let closed_hp = rational_to_hp(&mut hp, &closed);
            let comparison = format!(
                "closed form 4/2^{} = {}; {} 1e-9",
                n_min - 1,
                closed,
                if below { "<" } else { ">=" }
            );
            Ok(ExpectationReport {
                model,
                n_lo: n_min,
                n_hi,
                partial_sum: hp.decimal(&partial_hp),
                partial_sum_f64: hp.to_f64(&partial_hp),
                partial_sum_exact: Some(partial.to_string()),
                closed_form: Some(hp.decimal(&closed_hp)),
                closed_form_f64: hp.to_f64(&closed_hp).into(),
                closed_form_exact: Some(closed.to_string()),
                comparison,
                below_one_billionth: Some(below),
            })
        }
        Model::Naive => {
            let mut hp = Hp::new();
            let mut sum = hp.from_u64(0);
            for n in n_min..=n_hi {
                let ln_f = hp.ln_fermat(n);
                let term = hp.div(&hp.from_u64(2), &ln_f);
                sum = hp.add(&sum, &term);
            }
            // the tail is bounded by (2/log 2) Σ 2^-n = 2^(2-n_min)/log 2
            let ln2 = hp.ln2();
            let bound = hp.div(&hp.pow2(2 - n_min as i32), &ln2);
            let billionth = hp.from_f64(1e-9);
            let below = hp.lt(&bound, &billionth);
            Ok(ExpectationReport {
                model,
                n_lo: n_min,
                n_hi,
                partial_sum: hp.decimal(&sum),
                partial_sum_f64: hp.to_f64(&sum),
                partial_sum_exact: None,
                closed_form: Some(hp.decimal(&bound)),
                closed_form_f64: Some(hp.to_f64(&bound)),
                closed_form_exact: None,
                comparison: format!(
                    "geometric tail bound {} 1e-9",
                    if below { "<" } else { ">=" }
                ),
                below_one_billionth: Some(below),
            })
        }
        _ => Err(Error::domain(
            "expectation sums are defined for the naive and fullness-ratio models",
        )),
    }
}

fn rational_to_hp(hp: &mut Hp, r: &BigRational) -> astro_float::BigFloat {
    let numer = bigint_to_hp(hp, r.numer());
    let denom = bigint_to_hp(hp, r.denom());
    hp.div(&numer, &denom)
}

fn bigint_to_hp(hp: &mut Hp, v: &BigInt) -> astro_float::BigFloat {
    if let Some(u) = v.to_u64() {
        return hp.from_u64(u);
    }
    // powers of two dominate here; split as m * 2^k
    let (sign, bytes) = v.to_bytes_le();
    let mut acc = hp.from_u64(0);
    for (i, byte) in bytes.iter().enumerate() {
        if *byte == 0 {
            continue;
        }
        let part = hp.mul(&hp.from_u64(u64::from(*byte)), &hp.pow2(8 * i as i32));
        acc = hp.add(&acc, &part);
    }
    if sign == num_bigint::Sign::Minus {
        acc.inv_sign();
    }
    acc
}

/// Interval half-width thresholds implied by the equidistribution and
/// uniformity conditions at scale x.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalRequirement {
    /// Human-readable description of the scale, e.g. "F_33".
    pub x: String,
    pub log_x: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub multiplier: f64,
    /// (log x)^(1 + δ + ε), the equidistribution threshold.
    pub r_equidistribution: f64,
    /// (log x)^(2 + δ + ε), the stricter uniformity threshold.
    pub r_uniformity: f64,
    pub log10_r_equidistribution: f64,
    pub log10_r_uniformity: f64,
    /// Whether r_uniformity clears the short-interval condition
    /// multiplier * log² x.
    pub selberg_condition_satisfied: bool,
}

/// Thresholds at an arbitrary scale, given log x directly so Fermat-sized
/// scales need not be materialized.
pub fn interval_requirement(
    x_label: impl Into<String>,
    log_x: f64,
    delta: f64,
    epsilon: f64,
    multiplier: f64,
) -> Result<IntervalRequirement> {
    if log_x <= 1.0 {
        return Err(Error::domain("need log x > 1, i.e. x >= 3"));
    }
    if delta < 1.0 {
        return Err(Error::domain("δ must be at least 1"));
    }
    let log10_log_x = log_x.log10();
    let e_exp = 1.0 + delta + epsilon;
    let u_exp = 2.0 + delta + epsilon;
    let r_equi = log_x.powf(e_exp);
    let r_unif = log_x.powf(u_exp);
    let selberg = r_unif > multiplier * log_x * log_x
        || log10_log_x * u_exp > (multiplier * log_x * log_x).log10();
    Ok(IntervalRequirement {
        x: x_label.into(),
        log_x,
        delta,
        epsilon,
        multiplier,
        r_equidistribution: r_equi,
        r_uniformity: r_unif,
        log10_r_equidistribution: e_exp * log10_log_x,
        log10_r_uniformity: u_exp * log10_log_x,
        selberg_condition_satisfied: selberg,
    })
}

/// Thresholds at x = F_n, where log x = 2^n log 2.
pub fn interval_requirement_for_fermat(
    n: u32,
    delta: f64,
    epsilon: f64,
    multiplier: f64,
) -> Result<IntervalRequirement> {
    let log_x = 2f64.powi(n as i32) * 2f64.ln();
    interval_requirement(format!("F_{n}"), log_x, delta, epsilon, multiplier)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_prob_values() {
        let p33 = naive_prob(33);
        assert!((p33.value_f64 - 3.36e-10).abs() < 0.01e-10, "{}", p33.value_f64);
        let p5 = naive_prob(5);
        assert!((p5.value_f64 - 0.0902).abs() < 0.0005);
        let p0 = naive_prob(0);
        assert!(p0.clamped);
        assert_eq!(p0.value_f64, 1.0);
        assert!((p0.raw_f64 - 2.0 / 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn naive_prob_strictly_decreasing() {
        let mut last = f64::INFINITY;
        for n in 0..64 {
            let raw = naive_prob(n).raw_f64;
            assert!(raw < last);
            last = raw;
        }
    }

    #[test]
    fn sieve_adjusted_prob_at_b2_doubles_naive() {
        let adjusted = sieve_adjusted_prob(5, 2).unwrap();
        let naive = naive_prob(5);
        assert!((adjusted.raw_f64 - 2.0 * naive.raw_f64).abs() < 1e-12);
    }

    #[test]
    fn sieve_adjusted_exceeds_naive() {
        let adjusted = sieve_adjusted_prob(5, 100).unwrap();
        assert!(adjusted.raw_f64 > naive_prob(5).raw_f64);
    }

    #[test]
    fn sieve_adjusted_matches_mertens_closed_form() {
        // the product form carries the odd-number factor 2 on top of the
        // closed form's generic 1/log reading, so the stable comparison is
        // raw against 2x the closed form
        let adjusted = sieve_adjusted_prob(33, 1 << 24).unwrap();
        let closed: f64 = adjusted.parameters["mertens_closed_form"].parse().unwrap();
        assert!((adjusted.raw_f64 / (2.0 * closed) - 1.0).abs() < 0.02);
    }

    #[test]
    fn hardy_wright_stays_below_three() {
        let r = hardy_wright_expectation(1.0, 0, 200).unwrap();
        assert!(r.partial_sum_f64 < 3.0);
        assert!(r.partial_sum_f64 > 2.2 && r.partial_sum_f64 < 2.3);
    }

    #[test]
    fn hardy_wright_single_term() {
        let r = hardy_wright_expectation(1.0, 33, 33).unwrap();
        assert!((r.partial_sum_f64 - 1.68e-10).abs() < 0.005e-10);
    }

    #[test]
    fn hardy_wright_zero_constant() {
        let r = hardy_wright_expectation(0.0, 0, 10).unwrap();
        assert_eq!(r.partial_sum_f64, 0.0);
    }

    #[test]
    fn fullness_ratio_exact_values() {
        let p = fullness_ratio_prob(33, 2).unwrap();
        assert_eq!(p.exact.as_deref(), Some("1/2147483648"));
        let p2 = fullness_ratio_prob(2, 2).unwrap();
        assert_eq!(p2.exact.as_deref(), Some("1"));
        assert_eq!(p2.value_f64, 1.0);
    }

    #[test]
    fn larger_alpha_shrinks_the_bound() {
        let a2 = fullness_ratio_prob(10, 2).unwrap();
        let a3 = fullness_ratio_prob(10, 3).unwrap();
        assert!((a2.raw_f64 - 2f64.powi(-8)).abs() < 1e-18);
        assert!((a3.raw_f64 - 2f64.powi(-18)).abs() < 1e-18);
        assert!(a3.raw_f64 < a2.raw_f64);
    }

    #[test]
    fn alpha_one_is_rejected() {
        assert!(fullness_ratio_prob(2, 1).is_err());
        assert!(fullness_ratio_prob(1, 2).is_err());
    }

    #[test]
    fn tail_expectation_is_the_title_claim() {
        let r = expected_new_fermat_primes(33, Model::FullnessRatio, 64).unwrap();
        assert_eq!(r.closed_form_exact.as_deref(), Some("1/1073741824"));
        assert_eq!(r.below_one_billionth, Some(true));
        let r34 = expected_new_fermat_primes(34, Model::FullnessRatio, 8).unwrap();
        assert_eq!(r34.closed_form_exact.as_deref(), Some("1/2147483648"));
    }

    #[test]
    fn naive_tail_from_33() {
        let r = expected_new_fermat_primes(33, Model::Naive, 64).unwrap();
        assert!((r.partial_sum_f64 - 6.7e-10).abs() < 0.05e-10, "{}", r.partial_sum_f64);
    }

    #[test]
    fn interval_requirement_exponent_arithmetic() {
        let r = interval_requirement("x", 100.0, 1.0, 0.0, 100.0).unwrap();
        assert!((r.r_equidistribution - 100f64.powi(2)).abs() < 1e-6);
        assert!((r.r_uniformity - 100f64.powi(3)).abs() < 1e-6);
    }

    #[test]
    fn fermat_scale_requirement() {
        let r = interval_requirement_for_fermat(33, 2.0, 0.1, 100.0).unwrap();
        let log_x = 2f64.powi(33) * 2f64.ln();
        assert!((r.log10_r_uniformity - 4.1 * log_x.log10()).abs() < 1e-9);
        assert!(r.selberg_condition_satisfied);
    }
}
