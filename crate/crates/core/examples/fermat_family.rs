//! The Fermat family up close: the recurrence, pairwise coprimality, the
//! 2^t+1 primes, and deterministic verdicts on the first dozen F_n.
//!
//!     cargo run --example fermat_family

use fermat_lab::fermat::{fermat_number, fermat_t_primes, pairwise_coprime_check, recurrence_check};
use fermat_lab::ntkernel::{pepin_test, Verdict, DEFAULT_BIT_BUDGET};

fn main() -> fermat_lab::Result<()> {
    let budget = DEFAULT_BIT_BUDGET;

    println!("F_n = 2^(2^n) + 1:");
    for n in 0..6 {
        println!("  F_{n} = {}", fermat_number(n, budget)?);
    }

    println!("\nrecurrence F_(n+1) = F_0 F_1 ... F_n + 2:");
    for n in 1..8 {
        assert!(recurrence_check(n, budget)?);
    }
    println!("  holds for n = 1..8");
    println!("pairwise coprime up to F_10: {}", pairwise_coprime_check(10, budget)?);

    // a prime 2^t + 1 forces t to be a power of two, so these are exactly
    // the known Fermat primes
    println!("\nprimes of the form 2^t + 1 with t <= 64:");
    for (t, p) in fermat_t_primes(64, true, budget)? {
        println!("  2^{t} + 1 = {p}");
    }

    println!("\ndeterministic verdicts:");
    for n in 1..=12 {
        let verdict = pepin_test(n, budget)?;
        let status = match verdict.status {
            Verdict::Prime => "prime",
            Verdict::Composite => "composite",
            Verdict::Undetermined => "undetermined",
        };
        println!("  F_{n:<2} {status}");
    }
    Ok(())
}
