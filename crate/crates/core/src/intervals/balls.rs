//! Monte Carlo version of the balls-in-cups equidistribution statement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::windows::RNG_ALGORITHM;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct BallsCupsReport {
    pub balls: u64,
    pub cups: u64,
    pub trials: u64,
    pub seed: u64,
    pub epsilon: f64,
    pub rng: &'static str,
    /// Per trial, (max cup load - mean) / mean.
    pub max_relative_deviation: Vec<f64>,
    /// Per trial, (min cup load - mean) / mean, i.e. <= 0.
    pub min_relative_deviation: Vec<f64>,
    /// Fraction of trials with every cup inside (1 ± ε)(B/C).
    pub epsilon_pass_fraction: f64,
}

impl BallsCupsReport {
    /// Re-evaluates the pass fraction at another ε from the stored per-trial
    /// extremes; nonincreasing as ε shrinks.
    pub fn pass_fraction_at(&self, epsilon: f64) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        let passes = self
            .max_relative_deviation
            .iter()
            .zip(&self.min_relative_deviation)
            .filter(|(max, min)| **max <= epsilon && **min >= -epsilon)
            .count();
        passes as f64 / self.trials as f64
    }
}

/// Throws B balls uniformly and independently into C cups, `trials` times,
/// recording the extreme cup loads relative to the mean B/C. A trial with
/// B = 0 passes vacuously: every cup holds exactly the mean of zero.
pub fn balls_in_cups(
    balls: u64,
    cups: u64,
    trials: u64,
    seed: u64,
    epsilon: f64,
) -> Result<BallsCupsReport> {
    if cups == 0 {
        return Err(Error::domain("need at least one cup"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mean = balls as f64 / cups as f64;
    let mut max_dev = Vec::with_capacity(trials as usize);
    let mut min_dev = Vec::with_capacity(trials as usize);
    for _ in 0..trials {
        let mut loads = vec![0u64; cups as usize];
        for _ in 0..balls {
            let cup = rng.gen_range(0..cups) as usize;
            loads[cup] += 1;
        }
        let max = *loads.iter().max().unwrap();
        let min = *loads.iter().min().unwrap();
        if balls == 0 {
            max_dev.push(0.0);
            min_dev.push(0.0);
        } else {
            max_dev.push((max as f64 - mean) / mean);
            min_dev.push((min as f64 - mean) / mean);
        }
    }
    let mut report = BallsCupsReport {
        balls,
        cups,
        trials,
        seed,
        epsilon,
        rng: RNG_ALGORITHM,
        max_relative_deviation: max_dev,
        min_relative_deviation: min_dev,
        epsilon_pass_fraction: 0.0,
    };
    report.epsilon_pass_fraction = report.pass_fraction_at(epsilon);
    Ok(report)
}
