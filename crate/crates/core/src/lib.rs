//! Computational experiments around the Fermat primes: factor search, the
//! classical primality tests, interval statistics for primes and K-full
//! numbers, and the heuristic density models that bound the expected number
//! of new Fermat primes.
//!
//! The library is organized in four layers:
//!
//! - [`ntkernel`]: multiprecision modular arithmetic, sieves, factorization,
//!   and the Miller-Rabin / Proth / Pépin / Lucas-Lehmer tests.
//! - [`fermat`]: Fermat-number identities, the Proth factor search with its
//!   persistent factor database, and the list (A)/(B) classification.
//! - [`intervals`]: empirical interval statistics — prime counts in
//!   progressions, K-full densities, Mertens products, ψ second moments, and
//!   the balls-in-cups equidistribution simulation.
//! - [`heuristics`]: the probability models and expectation sums, from the
//!   naive 2/log x estimate to the 4/2^n fullness-ratio bound and the
//!   Mersenne conjecture censuses.
//!
//! Each major capability also has a runnable example under `examples/`, and
//! the `fermat-lab` binary exposes everything as subcommands.

pub mod cli;
pub mod error;
pub mod fermat;
pub mod heuristics;
pub mod intervals;
pub mod ntkernel;
pub mod report;

pub use error::{Error, Result};
pub use ntkernel::DEFAULT_BIT_BUDGET;
