//! Count K-full integers (all prime divisors = 1 mod K) against primes
//! = 1 (mod K) in shrinking windows around a fixed center. The ratio stays
//! between 1 and 2 and sinks toward 1 as the window narrows.
//!
//!     cargo run --release --example kfull_density

use fermat_lab::intervals::{kfull_ratio_experiment, DEFAULT_SIEVE_BUDGET};

fn main() -> fermat_lab::Result<()> {
    let x = 10_000_000u64;
    let k = 64u64;
    let log_x = (x as f64).ln();
    let r_floor = (log_x * log_x * log_x).ceil() as u64;
    let schedule = [1_000_000u64, 100_000, 10_000, r_floor];

    println!("x = {x}, K = {k}, (log x)^3 = {r_floor}");
    println!("{:>9} {:>9} {:>9} {:>7}", "r", "K-full", "primes", "ratio");
    for report in kfull_ratio_experiment(x, k, &schedule, DEFAULT_SIEVE_BUDGET)? {
        println!(
            "{:>9} {:>9} {:>9} {:>7.4}",
            report.interval.r,
            report.count_k_full,
            report.count_primes_1_mod_k,
            report.ratio.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
