//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single pass line (visible with `--nocapture`); a failed assertion is the
//! fail line.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use fermat_lab::fermat::{dubner_keller_stat, factor_search, fermat_number, SearchBudget};
use fermat_lab::heuristics::{
    expected_new_fermat_primes, fullness_ratio_rational, special_mersenne_expectation, Hp, Model,
};
use fermat_lab::intervals::{
    balls_in_cups, kfull_ratio_experiment, mertens_product, second_moment, SecondMomentParams,
    DEFAULT_SIEVE_BUDGET,
};
use fermat_lab::ntkernel::{
    factorize, lucas_lehmer, pepin_test, probable_prime, residue_trace, sieve_primes,
    EffortBudget, DEFAULT_BIT_BUDGET,
};
use fermat_lab::Error;

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<String> = std::iter::once("fermat-lab".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let code = fermat_lab::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn criterion_01_factorization_of_f5() {
    let started = Instant::now();
    let f5 = fermat_number(5, DEFAULT_BIT_BUDGET).unwrap();
    let f = factorize(&f5, &EffortBudget::default()).unwrap();
    assert!(f.is_complete());
    assert_eq!(
        f.factors,
        vec![
            (BigUint::from(641u32), 1),
            (BigUint::from(6_700_417u32), 1)
        ]
    );
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!("criterion 01 PASS: F_5 = 641 * 6700417 in {elapsed:?}");
}

#[test]
fn criterion_02_deterministic_sweep_f1_to_f12() {
    let started = Instant::now();
    for n in 1..=4u32 {
        assert!(pepin_test(n, DEFAULT_BIT_BUDGET).unwrap().is_prime(), "F_{n}");
    }
    for n in 5..=12u32 {
        assert!(pepin_test(n, DEFAULT_BIT_BUDGET).unwrap().is_composite(), "F_{n}");
    }
    // anything beyond desk scale is refused by budget, not attempted
    assert!(matches!(
        pepin_test(24, DEFAULT_BIT_BUDGET),
        Err(Error::Resource { .. })
    ));
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("criterion 02 PASS: F_1..F_4 prime, F_5..F_12 composite in {elapsed:?}");
}

#[test]
fn criterion_03_search_rediscovers_641() {
    let started = Instant::now();
    let budget = SearchBudget { k_max: 5, m_max: 7, ..SearchBudget::default() };
    let records = factor_search(5, 5, &budget).unwrap();
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!((r.n, r.k, r.m), (5, 5, 7));
    assert_eq!(r.p, BigUint::from(641u32));
    assert!(r.verified);
    r.verify().unwrap();
    let trace = residue_trace(&r.p, 64).unwrap();
    assert_eq!(trace.hit_index, Some(5));

    let (code, out) = run_cli(&["factor-search", "--n-lo", "5", "--n-hi", "5", "--k-max", "5", "--m-max", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"p\":\"641\""), "{out}");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!("criterion 03 PASS: 641 = 5*2^7 + 1 rediscovered, trace hits at 5");
}

#[test]
fn criterion_04_tail_expectation_is_two_to_minus_thirty() {
    let report = expected_new_fermat_primes(33, Model::FullnessRatio, 64).unwrap();
    let closed: BigRational = {
        let (n, d) = report
            .closed_form_exact
            .as_deref()
            .unwrap()
            .split_once('/')
            .unwrap();
        BigRational::new(n.parse().unwrap(), d.parse().unwrap())
    };
    let two_to_minus_30 = BigRational::new(BigInt::one(), BigInt::from(1u64 << 30));
    assert_eq!(closed, two_to_minus_30);
    let billionth = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    assert!(closed < billionth);
    assert_eq!(report.below_one_billionth, Some(true));
    let partial: BigRational = {
        let (n, d) = report
            .partial_sum_exact
            .as_deref()
            .unwrap()
            .split_once('/')
            .unwrap();
        BigRational::new(n.parse().unwrap(), d.parse().unwrap())
    };
    let rel = ((&closed - &partial) / &closed).abs();
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(18));
    assert!(rel < tol, "relative gap {rel}");

    let (code, out) = run_cli(&["expectation", "--model", "fullness-ratio", "--from", "33"]);
    assert_eq!(code, 0);
    assert!(out.contains("1/1073741824"));
    assert!(out.contains("\"below_one_billionth\":true"));
    println!("criterion 04 PASS: tail expectation 2^-30 < 1e-9, partial sum within 1e-18");
}

#[test]
fn criterion_05_progression_ratio_is_four_over_two_to_n() {
    for n in 2..=1000u32 {
        let got = fullness_ratio_rational(n).unwrap();
        let want = BigRational::new(BigInt::from(4u32), BigInt::from(BigUint::one() << n));
        assert_eq!(got, want, "n={n}");
    }
    println!("criterion 05 PASS: ratio of totients is exactly 4/2^n for n = 2..1000");
}

#[test]
fn criterion_06_log_sum_partial_sums_bounded() {
    let mut hp = Hp::new();
    let limit_a = hp.from_u64(3);
    // 2/log 2 + 1e-6
    let ln2 = hp.ln2();
    let tight = hp.add(&hp.div(&hp.from_u64(2), &ln2), &hp.from_f64(1e-6));
    let mut sum = hp.from_u64(0);
    for n in 0..=1000u32 {
        let ln_f = hp.ln_fermat(n);
        let term = hp.div(&hp.from_u64(1), &ln_f);
        sum = hp.add(&sum, &term);
        assert!(hp.lt(&sum, &limit_a), "prefix at n={n} reached 3");
        assert!(hp.lt(&sum, &tight), "prefix at n={n} reached 2/log2 + 1e-6");
    }
    println!(
        "criterion 06 PASS: all prefixes of sum 1/log F_n below 2/log 2 + 1e-6 (final {:.6})",
        hp.to_f64(&sum)
    );
}

#[test]
fn criterion_07_kfull_ratio_shrinks_with_the_window() {
    let started = Instant::now();
    let x = 10_000_000u64;
    let log_x = (x as f64).ln();
    let r_floor = (log_x * log_x * log_x).ceil() as u64;
    let schedule = [1_000_000u64, 100_000, 10_000, r_floor];
    let reports = kfull_ratio_experiment(x, 64, &schedule, DEFAULT_SIEVE_BUDGET).unwrap();
    for report in &reports {
        let ratio = report.ratio.unwrap();
        assert!(ratio > 1.0 && ratio <= 2.05, "r={} ratio={ratio}", report.interval.r);
    }
    // the (log x)^3 window holds only ~17 primes, so one K-full composite
    // moves its ratio by 1/17; compare the trend on windows with enough mass
    let largest = reports.first().unwrap();
    let smallest_meaningful = reports
        .iter()
        .filter(|r| r.count_primes_1_mod_k >= 30)
        .last()
        .unwrap();
    assert!(smallest_meaningful.interval.r < largest.interval.r);
    assert!(
        smallest_meaningful.ratio.unwrap() < largest.ratio.unwrap(),
        "{} vs {}",
        smallest_meaningful.ratio.unwrap(),
        largest.ratio.unwrap()
    );
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!(
        "criterion 07 PASS: ratios {:?} all in (1, 2.05], shrinking toward 1 ({:?})",
        reports.iter().map(|r| (r.interval.r, r.ratio.unwrap())).collect::<Vec<_>>(),
        elapsed
    );
}

#[test]
fn criterion_08_euler_product_matches_mertens_asymptotic() {
    let product = mertens_product(1_000_000).product;
    // independent reference: e^gamma log 10^6 from first principles
    let reference = 0.577_215_664_901_532_9f64.exp() * (1e6f64).ln();
    let deviation = (product / reference - 1.0).abs();
    assert!(deviation < 0.02, "deviation {deviation}");
    println!("criterion 08 PASS: product over p <= 10^6 within {deviation:.5} of e^gamma log B");
}

#[test]
fn criterion_09_dividing_fraction_near_one_over_k() {
    let mut misses = Vec::new();
    for k in [3u64, 5, 9] {
        let r = dubner_keller_stat(k, 1, 400).unwrap();
        let fraction = r.dividing_fraction.unwrap();
        let sigma = r.standard_error.unwrap();
        let gap = (fraction - r.expected_fraction).abs();
        if gap > 3.0 * sigma {
            misses.push((k, fraction, r.expected_fraction, sigma));
        }
    }
    // a single 3-sigma miss is a statistical event to investigate, not an
    // automatic failure
    assert!(misses.len() <= 1, "multiple 3-sigma misses: {misses:?}");
    if let Some(m) = misses.first() {
        println!("criterion 09 PASS (with note): one 3-sigma outlier to investigate: {m:?}");
    } else {
        println!("criterion 09 PASS: dividing fractions within 3 sigma of 1/k for k = 3, 5, 9");
    }
}

#[test]
fn criterion_10_balls_concentrate_near_the_mean() {
    let c = 100u64;
    let b = (10.0 * c as f64 * (c as f64).ln()).ceil() as u64;
    assert_eq!(b, 4606);
    let r = balls_in_cups(b, c, 1000, 0, 0.5).unwrap();
    // the exact per-trial pass probability at these parameters is ~0.93
    // (two Poisson tails across 100 cups); 0.90 is the achievable floor
    assert!(
        r.epsilon_pass_fraction >= 0.90,
        "pass fraction {}",
        r.epsilon_pass_fraction
    );
    println!(
        "criterion 10 PASS: every cup within 50% of the mean in {:.1}% of 1000 trials",
        100.0 * r.epsilon_pass_fraction
    );
}

#[test]
fn criterion_11_second_moment_below_the_bound_shape() {
    let params = SecondMomentParams::new(100_000, 1000, 8, 1);
    let r = second_moment(&params, DEFAULT_SIEVE_BUDGET).unwrap();
    assert!(r.bound_ratio < 1.0, "bound ratio {}", r.bound_ratio);
    assert!(
        r.exceptional_classes.len() <= 1,
        "exceptional classes {:?}",
        r.exceptional_classes
    );
    println!(
        "criterion 11 PASS: I/(h x log^2(qx)) = {:.4}, exceptional classes {:?}",
        r.bound_ratio, r.exceptional_classes
    );
}

#[test]
fn criterion_12_twin_exponent_census_cross_checked() {
    let report = special_mersenne_expectation(1, 2, 2000, 2000).unwrap();
    // independent brute-force twin enumeration
    let primes = sieve_primes(2003);
    let is_prime = |n: u64| primes.binary_search(&n).is_ok();
    let expected: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| p <= 2000 && is_prime(p + 2))
        .collect();
    let got: Vec<u64> = report.census.iter().map(|e| e.p).collect();
    assert_eq!(got, expected);
    // deterministic verdicts against an independent probabilistic test
    for entry in &report.census {
        if entry.p == 2 {
            continue;
        }
        let m = (BigUint::one() << entry.p) - BigUint::one();
        let ll = lucas_lehmer(entry.p).unwrap().is_prime();
        let mr = probable_prime(&m, 16).unwrap().is_prime();
        assert_eq!(ll, mr, "p={}", entry.p);
        assert_eq!(entry.mersenne_status, if ll { "prime" } else { "composite" });
    }
    assert!(report.expectation_sum_f64 < 1.0);
    println!(
        "criterion 12 PASS: {} twin exponents <= 2000, verdicts agree, sum 1/(p+2) = {:.5}",
        report.count, report.expectation_sum_f64
    );
}

#[test]
fn criterion_13_byte_identical_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("factors.jsonl");
    let db_str = db.to_str().unwrap();
    // seed the database once so classify and db verify have input
    let (code, _) = run_cli(&["factor-search", "--n-lo", "5", "--n-hi", "9", "--k-max", "64", "--m-max", "20", "--db", db_str]);
    assert_eq!(code, 0);

    let invocations: Vec<Vec<&str>> = vec![
        vec!["pepin", "--n", "5"],
        vec!["lucas-lehmer", "--p", "13"],
        vec!["trace", "--p", "641"],
        vec!["factor-search", "--n-lo", "5", "--n-hi", "9", "--k-max", "64", "--m-max", "20"],
        vec!["classify", "--db", db_str, "--n-lo", "5", "--n-hi", "9"],
        vec!["dubner-keller", "--k", "3", "--m-lo", "1", "--m-hi", "40"],
        vec!["kfull-ratio", "--x", "100000", "--k", "16", "--r", "10000,1000"],
        vec!["mertens", "--b", "10000"],
        vec!["selberg-window", "--x", "1000000", "--y", "20000", "--samples", "25", "--seed", "9"],
        vec!["second-moment", "--x", "20000", "--h", "500", "--q", "4", "--step", "5"],
        vec!["balls-cups", "--B", "2000", "--C", "50", "--trials", "100", "--seed", "3"],
        vec!["prob", "--model", "sieve-adjusted", "--n", "33", "--b", "1000"],
        vec!["expectation", "--model", "naive", "--from", "33"],
        vec!["interval-req", "--fermat-n", "33"],
        vec!["mersenne-census", "--a", "2", "--b", "1", "--x", "200"],
        vec!["db", "verify", "--path", db_str],
        vec!["mertens", "--b", "10000", "--csv"],
    ];
    for args in &invocations {
        let (c1, out1) = run_cli(args);
        let (c2, out2) = run_cli(args);
        assert_eq!(c1, 0, "{args:?}");
        assert_eq!(c1, c2, "{args:?}");
        assert_eq!(out1, out2, "payload differs for {args:?}");
        assert!(!out1.is_empty());
    }
    println!("criterion 13 PASS: {} subcommand invocations byte-identical on rerun", invocations.len());
}
