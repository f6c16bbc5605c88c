//! How often does a Proth prime k*2^m + 1 divide some Fermat number? For
//! fixed odd k the observed fraction sits near 1/k.
//!
//!     cargo run --release --example dividing_fractions

use fermat_lab::fermat::dubner_keller_stat;

fn main() -> fermat_lab::Result<()> {
    println!("{:>3} {:>7} {:>10} {:>10} {:>8}", "k", "primes", "dividing", "expected", "stderr");
    for k in [1u64, 3, 5, 7, 9, 11, 15] {
        let r = dubner_keller_stat(k, 1, 300)?;
        let fraction = r
            .dividing_fraction
            .map(|f| format!("{f:.4}"))
            .unwrap_or_else(|| "-".into());
        let stderr = r
            .standard_error
            .map(|s| format!("{s:.4}"))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:>3} {:>7} {:>10} {:>10.4} {:>8}",
            k, r.sample_size, fraction, r.expected_fraction, stderr
        );
    }
    println!("\nk = 1 is exceptional: 2^m + 1 can only be prime when m is a power");
    println!("of two, and then it IS a Fermat number, so the fraction is 1.");
    Ok(())
}
