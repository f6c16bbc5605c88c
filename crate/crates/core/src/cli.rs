//! Command-line front end. Every experiment is a subcommand; output is a
//! config-echo header followed by the report, in structured text (default)
//! or CSV. The payload on standard output is byte-identical across runs with
//! the same configuration and seed; wall time goes to standard error.
//!
//! Exit codes: 0 success, 1 usage error, 2 resource refusal, 3 verification
//! failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fermat::{
    classify_lists, dubner_keller_stat, factor_search, FactorDatabase, SearchBudget,
};
use crate::heuristics::{
    self, expected_new_fermat_primes, fullness_ratio_prob, hardy_wright_expectation,
    interval_requirement, interval_requirement_for_fermat, mersenne_harmonic, naive_prob,
    sieve_adjusted_prob, special_mersenne_expectation, Model,
};
use crate::intervals::{
    balls_in_cups, kfull_ratio_experiment, mertens_product, second_moment, selberg_window_check,
    SecondMomentParams, SelbergWindowParams, DEFAULT_SIEVE_BUDGET,
};
use crate::ntkernel::{
    lucas_lehmer, pepin_test, residue_trace, Evidence, PrimalityVerdict, Verdict,
    DEFAULT_BIT_BUDGET,
};
use crate::report::{csv_table, structured_line, OutputFormat};

const ENV_BIT_BUDGET: &str = "FERMAT_LAB_BIT_BUDGET";
const ENV_DB_PATH: &str = "FERMAT_LAB_DB";

#[derive(Parser)]
#[command(
    name = "fermat-lab",
    version,
    about = "Fermat-number experiments: factor search, primality tests, interval statistics, and prime-density models"
)]
struct Cli {
    /// Emit CSV instead of line-oriented structured text
    #[arg(long, global = true)]
    csv: bool,
    /// Bit budget for huge operands; refused (exit 2) when exceeded
    #[arg(long, global = true, env = ENV_BIT_BUDGET)]
    bit_budget: Option<u64>,
    /// Sieve budget: largest integer any sieve-backed experiment may touch
    #[arg(long, global = true)]
    sieve_budget: Option<u64>,
    /// Worker threads for parallel search (default: available parallelism)
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Naive,
    SieveAdjusted,
    HardyWrightTerm,
    FullnessRatio,
}

#[derive(Subcommand)]
enum Cmd {
    /// Deterministic primality test for F_n by the 3^((F_n-1)/2) criterion
    Pepin {
        #[arg(long)]
        n: u32,
    },
    /// Deterministic primality test for M_p = 2^p - 1
    LucasLehmer {
        #[arg(long)]
        p: u64,
    },
    /// Repeated-squaring residue sequence 2, 2^2, 2^4, ... mod p
    Trace {
        /// Odd prime modulus, decimal
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 64)]
        max_steps: u64,
    },
    /// Search for Proth-form prime factors of F_n over an index range
    FactorSearch {
        #[arg(long)]
        n_lo: u32,
        #[arg(long)]
        n_hi: u32,
        /// Largest odd multiplier k
        #[arg(long, default_value_t = SearchBudget::default().k_max)]
        k_max: u64,
        /// Largest exponent m
        #[arg(long, default_value_t = SearchBudget::default().m_max)]
        m_max: u32,
        /// Merge discovered records into this database file
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Split verified database records into fully-factored and
    /// partially-factored index lists
    Classify {
        /// Database file (env FERMAT_LAB_DB)
        #[arg(long, env = ENV_DB_PATH)]
        db: PathBuf,
        #[arg(long)]
        n_lo: u32,
        #[arg(long)]
        n_hi: u32,
    },
    /// Fraction of Proth primes k*2^m+1 dividing some F_n, against 1/k
    DubnerKeller {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m_lo: u32,
        #[arg(long)]
        m_hi: u32,
    },
    /// K-full count over primes = 1 (mod K) in shrinking windows around x
    KfullRatio {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        k: u64,
        /// Comma-separated half-widths, largest first
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<u64>,
    },
    /// Euler product over primes up to B against e^gamma log B
    Mertens {
        #[arg(long)]
        b: u64,
    },
    /// Prime counts in seeded random short windows against y / log t
    SelbergWindow {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long, default_value_t = 100.0)]
        multiplier: f64,
    },
    /// Second moment of psi increments over classes mod q
    SecondMoment {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        step: Option<u64>,
    },
    /// Monte Carlo equidistribution: B balls into C cups
    BallsCups {
        #[arg(long = "B")]
        balls: u64,
        #[arg(long = "C")]
        cups: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
    },
    /// Primality probability of F_n under one density model
    Prob {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: u32,
        /// Small-divisor bound for the sieve-adjusted model
        #[arg(long, default_value_t = 1000)]
        b: u64,
        /// Progression exponent for the fullness-ratio model (q = 2^(alpha n))
        #[arg(long, default_value_t = 2)]
        alpha: u32,
        /// Constant A of the A/log F_n term
        #[arg(long, default_value_t = 1.0)]
        a: f64,
    },
    /// Expected number of new Fermat primes from an index onward
    Expectation {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        from: u32,
        #[arg(long, default_value_t = 64)]
        terms: u32,
        /// Constant A for the hardy-wright-term model
        #[arg(long, default_value_t = 1.0)]
        a: f64,
    },
    /// Interval half-widths required by the equidistribution and uniformity
    /// conditions
    IntervalReq {
        /// Evaluate at x = F_n
        #[arg(long, conflicts_with = "log_x")]
        fermat_n: Option<u32>,
        /// Evaluate at a scale given by log x directly
        #[arg(long)]
        log_x: Option<f64>,
        #[arg(long, default_value_t = 2.0)]
        delta: f64,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 100.0)]
        multiplier: f64,
    },
    /// Census of primes p with ap+b prime, the 1/(ap+b) expectation sum, and
    /// Lucas-Lehmer verdicts on the census Mersenne numbers
    MersenneCensus {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        x: u64,
        /// Run Lucas-Lehmer on M_p only for census p up to this bound
        #[arg(long, default_value_t = 2000)]
        ll_cutoff: u64,
        /// Also report the prime-harmonic sum up to x as a reference
        #[arg(long)]
        harmonic: bool,
    },
    /// Database maintenance
    Db {
        #[command(subcommand)]
        cmd: DbCmd,
    },
}

#[derive(Subcommand)]
enum DbCmd {
    /// Re-verify every record and the file checksum
    Verify {
        /// Database file (env FERMAT_LAB_DB)
        #[arg(long, env = ENV_DB_PATH)]
        path: PathBuf,
    },
}

/// Serializable view of a primality verdict, with big integers rendered in
/// decimal.
#[derive(Serialize)]
struct VerdictOut {
    target: String,
    status: &'static str,
    test: &'static str,
    evidence_kind: Option<&'static str>,
    evidence: Option<String>,
}

impl VerdictOut {
    fn new(target: String, v: &PrimalityVerdict) -> Self {
        let status = match v.status {
            Verdict::Prime => "prime",
            Verdict::Composite => "composite",
            Verdict::Undetermined => "undetermined",
        };
        let (kind, value) = match &v.evidence {
            Some(Evidence::Divisor(d)) => (Some("divisor"), Some(d.to_string())),
            Some(Evidence::WitnessBase(b)) => (Some("witness-base"), Some(b.to_string())),
            Some(Evidence::FinalResidue(r)) => (Some("final-residue"), Some(r.to_string())),
            None => (None, None),
        };
        VerdictOut {
            target,
            status,
            test: v.test,
            evidence_kind: kind,
            evidence: value,
        }
    }
}

#[derive(Serialize)]
struct TraceOut {
    p: String,
    sequence: Vec<String>,
    hit_index: Option<u64>,
    cycled: bool,
    divides: Option<String>,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } | Error::EffortExhausted { .. } => 2,
        Error::Verification(_) => 3,
        _ => 1,
    }
}

struct Sink<'a> {
    out: &'a mut dyn Write,
    format: OutputFormat,
}

impl Sink<'_> {
    /// Writes the config-echo header and the report payload.
    fn emit<T: Serialize>(&mut self, kind: &str, config: Value, report: &T) -> Result<()> {
        match self.format {
            OutputFormat::StructuredText => {
                writeln!(self.out, "{}", structured_line("config", &config)?)?;
                writeln!(self.out, "{}", structured_line(kind, report)?)?;
            }
            OutputFormat::Csv => {
                writeln!(self.out, "# config: {config}")?;
                write!(self.out, "{}", csv_table(report)?)?;
            }
        }
        Ok(())
    }
}

/// Parses and runs one invocation, writing reports to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let reason = e
                .to_string()
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments")
                .to_string();
            let _ = writeln!(err, "error: {reason}");
            return 1;
        }
    };
    if let Some(w) = cli.workers {
        // best effort; the global pool may already exist in-process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let started = Instant::now();
    let format = if cli.csv { OutputFormat::Csv } else { OutputFormat::StructuredText };
    let mut sink = Sink { out, format };
    let code = match dispatch(&cli, &mut sink) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    let _ = writeln!(err, "wall_time_ms={}", started.elapsed().as_millis());
    code
}

fn base_config(cli: &Cli, subcommand: &str) -> Value {
    json!({
        "subcommand": subcommand,
        "format": if cli.csv { "csv" } else { "structured-text" },
        "version": env!("CARGO_PKG_VERSION"),
    })
}

fn merge(mut config: Value, params: Value) -> Value {
    if let (Some(base), Some(extra)) = (config.as_object_mut(), params.as_object()) {
        for (k, v) in extra {
            base.insert(k.clone(), v.clone());
        }
    }
    config
}

fn dispatch(cli: &Cli, sink: &mut Sink) -> Result<i32> {
    let bit_budget = cli.bit_budget.unwrap_or(DEFAULT_BIT_BUDGET);
    let sieve_budget = cli.sieve_budget.unwrap_or(DEFAULT_SIEVE_BUDGET);
    match &cli.cmd {
        Cmd::Pepin { n } => {
            let config = merge(base_config(cli, "pepin"), json!({"n": n, "bit_budget": bit_budget}));
            let verdict = pepin_test(*n, bit_budget)?;
            sink.emit("pepin", config, &VerdictOut::new(format!("F_{n}"), &verdict))?;
            Ok(0)
        }
        Cmd::LucasLehmer { p } => {
            let config = merge(base_config(cli, "lucas-lehmer"), json!({"p": p}));
            let verdict = lucas_lehmer(*p)?;
            sink.emit("lucas-lehmer", config, &VerdictOut::new(format!("M_{p}"), &verdict))?;
            Ok(0)
        }
        Cmd::Trace { p, max_steps } => {
            let config = merge(
                base_config(cli, "trace"),
                json!({"p": p, "max_steps": max_steps}),
            );
            let p = BigUint::from_str(p)
                .map_err(|_| Error::domain(format!("p must be a decimal integer, got {p:?}")))?;
            let trace = residue_trace(&p, *max_steps)?;
            let out = TraceOut {
                p: trace.p.to_string(),
                sequence: trace
                    .sequence
                    .iter()
                    .map(|r| r.value().to_string())
                    .collect(),
                hit_index: trace.hit_index,
                cycled: trace.cycled,
                divides: trace.hit_index.map(|r| format!("F_{r}")),
            };
            sink.emit("trace", config, &out)?;
            Ok(0)
        }
        Cmd::FactorSearch { n_lo, n_hi, k_max, m_max, db } => {
            let budget = SearchBudget {
                k_max: *k_max,
                m_max: *m_max,
                ..SearchBudget::default()
            };
            let config = merge(
                base_config(cli, "factor-search"),
                json!({"n_lo": n_lo, "n_hi": n_hi, "k_max": k_max, "m_max": m_max,
                       "db": db.as_ref().map(|p| p.display().to_string())}),
            );
            let records = factor_search(*n_lo, *n_hi, &budget)?;
            if let Some(path) = db {
                let mut database = if path.exists() {
                    let content = std::fs::read_to_string(path)?;
                    FactorDatabase::from_file_str(&content)?.0
                } else {
                    FactorDatabase::new()
                };
                for r in &records {
                    database.insert(r.clone());
                }
                std::fs::write(path, database.to_file_bytes())?;
            }
            sink.emit("factor-search", config, &records)?;
            Ok(0)
        }
        Cmd::Classify { db, n_lo, n_hi } => {
            let config = merge(
                base_config(cli, "classify"),
                json!({"db": db.display().to_string(), "n_lo": n_lo, "n_hi": n_hi}),
            );
            let content = std::fs::read_to_string(db)?;
            let (database, _) = FactorDatabase::from_file_str(&content)?;
            let report = classify_lists(&database, *n_lo, *n_hi);
            sink.emit("classify", config, &report)?;
            Ok(0)
        }
        Cmd::DubnerKeller { k, m_lo, m_hi } => {
            let config = merge(
                base_config(cli, "dubner-keller"),
                json!({"k": k, "m_lo": m_lo, "m_hi": m_hi}),
            );
            let report = dubner_keller_stat(*k, *m_lo, *m_hi)?;
            sink.emit("dubner-keller", config, &report)?;
            Ok(0)
        }
        Cmd::KfullRatio { x, k, r } => {
            let config = merge(
                base_config(cli, "kfull-ratio"),
                json!({"x": x, "k": k, "r": r, "sieve_budget": sieve_budget}),
            );
            let reports = kfull_ratio_experiment(*x, *k, r, sieve_budget)?;
            sink.emit("kfull-ratio", config, &reports)?;
            Ok(0)
        }
        Cmd::Mertens { b } => {
            let config = merge(base_config(cli, "mertens"), json!({"b": b}));
            let report = mertens_product(*b);
            sink.emit("mertens", config, &report)?;
            Ok(0)
        }
        Cmd::SelbergWindow { x, y, samples, seed, epsilon, multiplier } => {
            let mut params = SelbergWindowParams::new(*x, *y, *samples, *seed);
            params.epsilon = *epsilon;
            params.multiplier = *multiplier;
            let config = merge(
                base_config(cli, "selberg-window"),
                json!({"x": x, "y": y, "samples": samples, "seed": seed,
                       "epsilon": epsilon, "multiplier": multiplier,
                       "sieve_budget": sieve_budget}),
            );
            let report = selberg_window_check(&params, sieve_budget)?;
            sink.emit("selberg-window", config, &report)?;
            Ok(0)
        }
        Cmd::SecondMoment { x, h, q, step } => {
            let step = step.unwrap_or_else(|| (h / 100).max(1));
            let params = SecondMomentParams::new(*x, *h, *q, step);
            let config = merge(
                base_config(cli, "second-moment"),
                json!({"x": x, "h": h, "q": q, "step": step, "sieve_budget": sieve_budget}),
            );
            let report = second_moment(&params, sieve_budget)?;
            sink.emit("second-moment", config, &report)?;
            Ok(0)
        }
        Cmd::BallsCups { balls, cups, trials, seed, epsilon } => {
            let config = merge(
                base_config(cli, "balls-cups"),
                json!({"B": balls, "C": cups, "trials": trials, "seed": seed, "epsilon": epsilon}),
            );
            let report = balls_in_cups(*balls, *cups, *trials, *seed, *epsilon)?;
            sink.emit("balls-cups", config, &report)?;
            Ok(0)
        }
        Cmd::Prob { model, n, b, alpha, a } => {
            let config = merge(
                base_config(cli, "prob"),
                json!({"model": model_name(*model), "n": n, "b": b, "alpha": alpha, "a": a}),
            );
            let estimate = match model {
                ModelArg::Naive => naive_prob(*n),
                ModelArg::SieveAdjusted => sieve_adjusted_prob(*n, *b)?,
                ModelArg::FullnessRatio => fullness_ratio_prob(*n, *alpha)?,
                ModelArg::HardyWrightTerm => {
                    let mut hp = heuristics::Hp::new();
                    let ln_f = hp.ln_fermat(*n);
                    let raw = hp.div(&hp.from_f64(*a), &ln_f);
                    let one = hp.from_u64(1);
                    let clamped = hp.lt(&one, &raw);
                    let value = if clamped { one } else { raw.clone() };
                    let mut parameters = std::collections::BTreeMap::new();
                    parameters.insert("A".to_string(), a.to_string());
                    heuristics::ProbabilityEstimate {
                        model: Model::HardyWrightTerm,
                        n: *n,
                        value: hp.decimal(&value),
                        value_f64: hp.to_f64(&value),
                        raw: hp.decimal(&raw),
                        raw_f64: hp.to_f64(&raw),
                        clamped,
                        exact: None,
                        parameters,
                    }
                }
            };
            sink.emit("prob", config, &estimate)?;
            Ok(0)
        }
        Cmd::Expectation { model, from, terms, a } => {
            let config = merge(
                base_config(cli, "expectation"),
                json!({"model": model_name(*model), "from": from, "terms": terms, "a": a}),
            );
            let report = match model {
                ModelArg::Naive => expected_new_fermat_primes(*from, Model::Naive, *terms)?,
                ModelArg::FullnessRatio => {
                    expected_new_fermat_primes(*from, Model::FullnessRatio, *terms)?
                }
                ModelArg::HardyWrightTerm => {
                    hardy_wright_expectation(*a, *from, from + terms.saturating_sub(1))?
                }
                ModelArg::SieveAdjusted => {
                    return Err(Error::domain(
                        "the sieve-adjusted model has no expectation sum; use prob",
                    ))
                }
            };
            sink.emit("expectation", config, &report)?;
            Ok(0)
        }
        Cmd::IntervalReq { fermat_n, log_x, delta, epsilon, multiplier } => {
            let config = merge(
                base_config(cli, "interval-req"),
                json!({"fermat_n": fermat_n, "log_x": log_x, "delta": delta,
                       "epsilon": epsilon, "multiplier": multiplier}),
            );
            let report = match (fermat_n, log_x) {
                (Some(n), None) => interval_requirement_for_fermat(*n, *delta, *epsilon, *multiplier)?,
                (None, Some(lx)) => interval_requirement("x", *lx, *delta, *epsilon, *multiplier)?,
                _ => {
                    return Err(Error::domain(
                        "exactly one of --fermat-n and --log-x is required",
                    ))
                }
            };
            sink.emit("interval-req", config, &report)?;
            Ok(0)
        }
        Cmd::MersenneCensus { a, b, x, ll_cutoff, harmonic } => {
            let config = merge(
                base_config(cli, "mersenne-census"),
                json!({"a": a, "b": b, "x": x, "ll_cutoff": ll_cutoff, "harmonic": harmonic}),
            );
            let report = special_mersenne_expectation(*a, *b, *x, *ll_cutoff)?;
            if *harmonic {
                let reference = mersenne_harmonic(*x)?;
                sink.emit("mersenne-census", config, &json!({
                    "census": report,
                    "harmonic_reference": reference,
                }))?;
            } else {
                sink.emit("mersenne-census", config, &report)?;
            }
            Ok(0)
        }
        Cmd::Db { cmd: DbCmd::Verify { path } } => {
            let config = merge(
                base_config(cli, "db verify"),
                json!({"path": path.display().to_string()}),
            );
            let content = std::fs::read_to_string(path)?;
            let (_, report) = FactorDatabase::from_file_str(&content)?;
            let ok = report.all_passed();
            sink.emit("db-verify", config, &report)?;
            Ok(if ok { 0 } else { 3 })
        }
    }
}

fn model_name(m: ModelArg) -> &'static str {
    match m {
        ModelArg::Naive => "naive",
        ModelArg::SieveAdjusted => "sieve-adjusted",
        ModelArg::HardyWrightTerm => "hardy-wright-term",
        ModelArg::FullnessRatio => "fullness-ratio",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("fermat-lab".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn pepin_composite_f5() {
        let (code, out, _) = run_capture(&["pepin", "--n", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"status\":\"composite\""), "{out}");
        assert!(out.lines().next().unwrap().contains("\"report\":\"config\""));
    }

    #[test]
    fn pepin_bit_budget_refusal_is_exit_2() {
        let (code, _, err) = run_capture(&["pepin", "--n", "40", "--bit-budget", "1024"]);
        assert_eq!(code, 2);
        assert!(err.contains("error: "), "{err}");
    }

    #[test]
    fn usage_error_is_exit_1_one_line() {
        let (code, _, err) = run_capture(&["pepin", "--n", "abc"]);
        assert_eq!(code, 1);
        let diag: Vec<&str> = err.lines().filter(|l| l.starts_with("error: ")).collect();
        assert_eq!(diag.len(), 1);
    }

    #[test]
    fn unknown_flag_rejected() {
        let (code, _, _) = run_capture(&["mertens", "--b", "10", "--bogus", "1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn expectation_flags_the_billionth_bound() {
        let (code, out, _) =
            run_capture(&["expectation", "--model", "fullness-ratio", "--from", "33"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"below_one_billionth\":true"), "{out}");
        assert!(out.contains("9.31"), "{out}");
    }

    #[test]
    fn balls_cups_single_cup() {
        let (code, out, _) =
            run_capture(&["balls-cups", "--C", "1", "--B", "7", "--trials", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"epsilon_pass_fraction\":1.0"), "{out}");
    }

    #[test]
    fn csv_output_has_header_and_config_comment() {
        let (code, out, _) = run_capture(&["mertens", "--b", "100", "--csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with("# config: "));
        assert!(lines[1].split(',').any(|c| c == "product"), "{out}");
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn payload_reproducible() {
        let args = ["selberg-window", "--x", "100000", "--y", "3000", "--samples", "20", "--seed", "5"];
        let (c1, out1, _) = run_capture(&args);
        let (c2, out2, _) = run_capture(&args);
        assert_eq!(c1, 0);
        assert_eq!(c1, c2);
        assert_eq!(out1, out2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("factor-search"));
    }
}
