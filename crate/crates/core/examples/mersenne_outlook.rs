//! The Mersenne side: Lucas-Lehmer verdicts, the divergent 1/p sum that
//! suggests infinitely many Mersenne primes, and the bounded 1/(ap+b) sums
//! that suggest finitely many special ones.
//!
//!     cargo run --release --example mersenne_outlook

use fermat_lab::heuristics::{mersenne_harmonic, special_mersenne_expectation};
use fermat_lab::ntkernel::{lucas_lehmer, sieve_primes};

fn main() -> fermat_lab::Result<()> {
    let exponents: Vec<u64> = sieve_primes(130).into_iter().filter(|&p| p > 2).collect();
    let primes: Vec<u64> = exponents
        .iter()
        .copied()
        .filter(|&p| lucas_lehmer(p).map(|v| v.is_prime()).unwrap_or(false))
        .collect();
    println!("Mersenne prime exponents p <= 130: {primes:?}");

    println!("\nsum of 1/p over p <= X, against log log X + 0.2615:");
    for x in [1000u64, 100_000, 10_000_000] {
        let h = mersenne_harmonic(x)?;
        println!("  X = {x:>9}: {:.5} vs {:.5}", h.partial_sum_f64, h.reference);
    }

    for (label, a, b) in [("twin (p, p+2)", 1u64, 2i64), ("Sophie Germain (p, 2p+1)", 2, 1)] {
        let r = special_mersenne_expectation(a, b, 5000, 2500)?;
        println!("\n{label}, p <= 5000:");
        println!("  census size {} (count/(X/log^2 X) = {:.3})", r.count, r.sieve_shape_ratio);
        println!("  sum of 1/({}p{:+}) = {:.5}  -- bounded, unlike 1/p", a, b, r.expectation_sum_f64);
        println!("  census members with M_p prime: {:?}", r.mersenne_primes_found);
    }
    Ok(())
}
