//! Segmented sieve of Eratosthenes over machine-word ranges.

const SEGMENT_SIZE: u64 = 1 << 20;

/// All primes up to `limit`, ascending. `limit < 2` yields an empty list.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    primes_in_range(2, limit)
}

/// All primes in `[lo, hi]` inclusive, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_prime_in_range(lo, hi, |p| out.push(p));
    out
}

/// Visits every prime in `[lo, hi]` in ascending order without materializing
/// the whole list; memory use stays bounded by the segment size.
pub fn for_each_prime_in_range<F: FnMut(u64)>(lo: u64, hi: u64, mut visit: F) {
    if hi < 2 || hi < lo {
        return;
    }
    let lo = lo.max(2);
    let base = base_primes(hi.isqrt());
    let mut seg_lo = lo;
    while seg_lo <= hi {
        let seg_hi = seg_lo.saturating_add(SEGMENT_SIZE - 1).min(hi);
        let len = (seg_hi - seg_lo + 1) as usize;
        let mut composite = vec![false; len];
        for &p in &base {
            if p * p > seg_hi {
                break;
            }
            let mut start = p.max(seg_lo.div_ceil(p)) * p;
            if start < p * p {
                start = p * p;
            }
            let mut n = start;
            while n <= seg_hi {
                composite[(n - seg_lo) as usize] = true;
                n += p;
            }
        }
        for (i, &c) in composite.iter().enumerate() {
            if !c {
                visit(seg_lo + i as u64);
            }
        }
        seg_lo = seg_hi.saturating_add(1);
        if seg_lo == 0 {
            break;
        }
    }
}

/// Simple sieve used for the base primes of a segmented run.
fn base_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(sieve_primes(10), vec![2, 3, 5, 7]);
        assert_eq!(sieve_primes(2), vec![2]);
        assert!(sieve_primes(1).is_empty());
        assert!(sieve_primes(0).is_empty());
    }

    #[test]
    fn count_to_100_matches_trial_division() {
        let trial: Vec<u64> = (2..=100u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        assert_eq!(sieve_primes(100), trial);
        assert_eq!(sieve_primes(100).len(), 25);
    }

    #[test]
    fn range_crosses_segments() {
        let lo = SEGMENT_SIZE - 100;
        let hi = SEGMENT_SIZE + 100;
        let got = primes_in_range(lo, hi);
        let trial: Vec<u64> = (lo..=hi)
            .filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        assert_eq!(got, trial);
    }

    #[test]
    fn pi_of_a_million() {
        assert_eq!(sieve_primes(1_000_000).len(), 78_498);
    }
}
