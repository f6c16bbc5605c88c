//! The headline computation: chain the density models together and end at
//! the expected number of Fermat primes beyond F_32 — less than one
//! billionth.
//!
//!     cargo run --example expect_a_billionth

use fermat_lab::heuristics::{
    expected_new_fermat_primes, fullness_ratio_prob, hardy_wright_expectation,
    interval_requirement_for_fermat, naive_prob, sieve_adjusted_prob, Model,
};

fn main() -> fermat_lab::Result<()> {
    println!("density models at n = 33:");
    let naive = naive_prob(33);
    println!("  naive 2/log F_33:            {:.3e}", naive.value_f64);
    let adjusted = sieve_adjusted_prob(33, 1 << 20)?;
    println!("  sieve-adjusted (B = 2^20):   {:.3e}", adjusted.value_f64);
    let ratio = fullness_ratio_prob(33, 2)?;
    println!(
        "  fullness ratio 4/2^33:       {:.3e} = {}",
        ratio.value_f64,
        ratio.exact.as_deref().unwrap()
    );

    println!("\nthe classical upper bound: sum of A/log F_n stays below 3A");
    let hw = hardy_wright_expectation(1.0, 0, 1000)?;
    println!("  sum over n = 0..1000 (A = 1): {:.6}", hw.partial_sum_f64);

    println!("\nexpected new Fermat primes from n = 33 on:");
    let tail = expected_new_fermat_primes(33, Model::FullnessRatio, 64)?;
    println!("  partial sum (64 terms): {}", tail.partial_sum_exact.as_deref().unwrap());
    println!("  closed form:            {}", tail.closed_form_exact.as_deref().unwrap());
    println!("  {:.3e} -- {}", tail.closed_form_f64.unwrap(), tail.comparison);

    println!("\ninterval sizes the argument needs at x = F_33:");
    let req = interval_requirement_for_fermat(33, 2.0, 0.1, 100.0)?;
    println!("  log x = {:.4e}", req.log_x);
    println!("  equidistribution: r = (log x)^{:.1} ~ 10^{:.1}", 1.0 + req.delta + req.epsilon, req.log10_r_equidistribution);
    println!("  uniformity:       r = (log x)^{:.1} ~ 10^{:.1}", 2.0 + req.delta + req.epsilon, req.log10_r_uniformity);
    println!("  wide enough for the window condition: {}", req.selberg_condition_satisfied);
    Ok(())
}
