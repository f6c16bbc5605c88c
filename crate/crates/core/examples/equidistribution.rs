//! Balls into cups: with B comfortably above C log C, every cup holds close
//! to the mean B/C in almost every trial; with too few balls the extremes
//! run wild.
//!
//!     cargo run --release --example equidistribution

use fermat_lab::intervals::balls_in_cups;

fn main() -> fermat_lab::Result<()> {
    let cups = 100u64;
    let c_ln_c = (cups as f64 * (cups as f64).ln()).ceil() as u64;

    println!("C = {cups} cups, epsilon = 0.5, 500 trials each:");
    println!("{:>8} {:>14} {:>10} {:>10}", "balls", "balls/(C lnC)", "max dev", "pass");
    for mult in [1u64, 3, 10, 30] {
        let balls = mult * c_ln_c;
        let r = balls_in_cups(balls, cups, 500, 42, 0.5)?;
        let worst = r
            .max_relative_deviation
            .iter()
            .cloned()
            .fold(f64::MIN, f64::max);
        println!(
            "{:>8} {:>14} {:>10.3} {:>9.1}%",
            balls,
            mult,
            worst,
            100.0 * r.epsilon_pass_fraction
        );
    }
    Ok(())
}
