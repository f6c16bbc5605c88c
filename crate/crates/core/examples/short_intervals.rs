//! Primes in short intervals, three ways: the Mertens product, sampled
//! window counts against y / log t, and the second moment of psi increments
//! over residue classes.
//!
//!     cargo run --release --example short_intervals

use fermat_lab::intervals::{
    mertens_product, second_moment, selberg_window_check, SecondMomentParams,
    SelbergWindowParams, DEFAULT_SIEVE_BUDGET, EULER_GAMMA,
};

fn main() -> fermat_lab::Result<()> {
    println!("Euler product over p <= B vs e^gamma log B:");
    for b in [100u64, 10_000, 1_000_000] {
        let m = mertens_product(b);
        println!("  B = {b:>9}: product {:.5}, reference {:.5}, ratio {:.5}", m.product, m.reference, m.ratio);
    }
    let _ = EULER_GAMMA;

    let x = 100_000_000u64;
    let log_x = (x as f64).ln();
    println!("\nsampled windows [t, t+y], t random in [x, 2x-y], x = 10^8:");
    for (label, y) in [
        ("y = 100 log^2 x", (100.0 * log_x * log_x).ceil() as u64),
        ("y = log^2 x    ", (log_x * log_x).ceil() as u64),
        ("y = log x      ", log_x.ceil() as u64),
    ] {
        let params = SelbergWindowParams::new(x, y, 200, 7);
        let r = selberg_window_check(&params, DEFAULT_SIEVE_BUDGET)?;
        println!(
            "  {label} ({y:>6}): within 25% of y/log t in {:>5.1}% of samples (wide enough: {})",
            100.0 * r.pass_fraction,
            r.condition_met
        );
    }

    println!("\nsecond moment of psi increments, x = 10^5, h = 10^3, q = 8:");
    let params = SecondMomentParams::new(100_000, 1000, 8, 1);
    let r = second_moment(&params, DEFAULT_SIEVE_BUDGET)?;
    println!("  I(x,h,q) = {:.3e}", r.value);
    println!("  I / (h x log^2(qx)) = {:.5}", r.bound_ratio);
    for (a, v) in &r.per_class {
        println!("    class {a}: {v:.3e}");
    }
    println!("  exceptional classes at 50% tolerance: {:?}", r.exceptional_classes);
    Ok(())
}
