//! Randomized property checks for the cross-module invariants.

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use fermat_lab::fermat::{fermat_number, Fullness};
use fermat_lab::heuristics::{
    expected_new_fermat_primes, fullness_ratio_rational, naive_prob, sieve_adjusted_prob, Model,
};
use fermat_lab::intervals::{
    balls_in_cups, count_primes, count_primes_in_class, is_k_full, mertens_product,
    CongruenceClass, IntervalSpec, DEFAULT_SIEVE_BUDGET,
};
use fermat_lab::ntkernel::{factorize, mod_pow, primes_in_range, EffortBudget, DEFAULT_BIT_BUDGET};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn naive_pow_mod(b: u64, e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc * b % m;
    }
    acc
}

proptest! {
    #[test]
    fn mod_pow_matches_naive_repeated_multiplication(b in 0u64..1024, e in 0u64..1024, m in 2u64..1024) {
        let got = mod_pow(&BigUint::from(b), &BigUint::from(e), &BigUint::from(m)).unwrap();
        prop_assert_eq!(got.into_value(), BigUint::from(naive_pow_mod(b, e, m)));
    }

    #[test]
    fn factorization_multiplies_back(n in 2u64..5_000_000) {
        let n = BigUint::from(n);
        let f = factorize(&n, &EffortBudget::default()).unwrap();
        prop_assert!(f.is_complete());
        prop_assert_eq!(f.product(), n);
        // exponents positive, primes strictly increasing
        let ps: Vec<_> = f.factors.iter().map(|(p, _)| p.clone()).collect();
        prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(f.factors.iter().all(|(_, e)| *e >= 1));
    }

    #[test]
    fn kfullness_is_multiplicative(m in 1u64..3000, n in 1u64..3000, k in prop::sample::select(vec![2u64, 4, 8, 16, 64])) {
        let lhs = is_k_full(&BigUint::from(m * n), k).unwrap();
        let rhs = is_k_full(&BigUint::from(m), k).unwrap() && is_k_full(&BigUint::from(n), k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn class_counts_partition_the_primes(x in 2_000u64..50_000, r in 100u64..1_000, q in 1u64..30) {
        prop_assume!(r < x);
        let interval = IntervalSpec::new(x, r).unwrap();
        let total = count_primes(&interval, DEFAULT_SIEVE_BUDGET).unwrap();
        let mut by_class = 0u64;
        for a in 0..q.max(1) {
            if gcd(a, q) == 1 || q == 1 {
                by_class += count_primes_in_class(&interval, &CongruenceClass::new(q, a % q).unwrap(), DEFAULT_SIEVE_BUDGET).unwrap();
            }
            if q == 1 {
                break;
            }
        }
        let dividing_q = primes_in_range(interval.lo().max(2), interval.hi())
            .into_iter()
            .filter(|p| q > 1 && q % p == 0)
            .count() as u64;
        prop_assert_eq!(by_class + dividing_q, total);
    }

    #[test]
    fn adjusted_over_naive_is_the_euler_product(n in 0u32..200, b in 2u64..5_000) {
        let adjusted = sieve_adjusted_prob(n, b).unwrap();
        let naive = naive_prob(n);
        let product = mertens_product(b).product;
        let ratio = adjusted.raw_f64 / naive.raw_f64;
        prop_assert!((ratio / product - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tail_partial_sums_converge_geometrically(n_min in 2u32..200, t in 1u32..64) {
        let report = expected_new_fermat_primes(n_min, Model::FullnessRatio, t + 1).unwrap();
        // relative gap to the closed form is exactly 2^-(t+1) <= 2^-t
        let partial = report.partial_sum_f64;
        let closed = report.closed_form_f64.unwrap();
        let rel = (closed - partial) / closed;
        prop_assert!(rel <= (0.5f64).powi(t as i32) + 1e-15, "rel {rel}");
        prop_assert!(rel >= 0.0);
    }

    #[test]
    fn ratio_model_is_exact_powers_of_two(n in 2u32..500) {
        let r = fullness_ratio_rational(n).unwrap();
        prop_assert_eq!(r.numer() * (num_bigint::BigInt::one() << n), r.denom() * 4);
    }

    #[test]
    fn cup_pass_fraction_monotone_in_epsilon(balls in 1u64..400, cups in 1u64..40, seed in 0u64..50) {
        let r = balls_in_cups(balls, cups, 30, seed, 0.5).unwrap();
        let mut last = 1.0f64;
        for eps in [2.0, 1.0, 0.6, 0.4, 0.2, 0.1, 0.0] {
            let f = r.pass_fraction_at(eps);
            prop_assert!(f <= last + 1e-12);
            last = f;
        }
    }

}

#[test]
fn known_factors_are_lucas_full() {
    // every prime factor of F_5 and F_6 is 1 mod 2^(n+2)
    for n in [5u32, 6] {
        let f = fermat_number(n, DEFAULT_BIT_BUDGET).unwrap();
        let fac = factorize(&f, &EffortBudget::default()).unwrap();
        assert!(fac.is_complete());
        let modulus = BigUint::one() << (n + 2);
        for (p, _) in &fac.factors {
            assert!((p % &modulus).is_one(), "factor {p} of F_{n}");
        }
    }
    let _ = Fullness::Lucas;
}
