//! Hunt for Proth-form prime factors k*2^m + 1 of Fermat numbers, store the
//! finds in a verified database file, and classify the searched range into
//! indices with and without a known factor.
//!
//!     cargo run --release --example factor_hunt

use fermat_lab::fermat::{classify_lists, factor_search, FactorDatabase, SearchBudget};
use fermat_lab::ntkernel::{factorize, EffortBudget};
use num_bigint::BigUint;

fn main() -> fermat_lab::Result<()> {
    // Euler's classic: both prime factors of F_5 by direct factorization
    let f5 = BigUint::from(4_294_967_297u64);
    let factors = factorize(&f5, &EffortBudget::default())?;
    println!("F_5 = {}", f5);
    for (p, e) in &factors.factors {
        println!("  {p}^{e}");
    }

    // the same 641 (and much more) found the honest way: by searching the
    // Proth numbers that a Fermat factor must be
    let budget = SearchBudget {
        k_max: 1 << 12,
        m_max: 48,
        ..SearchBudget::default()
    };
    let records = factor_search(5, 40, &budget)?;
    println!("\nfactors of F_5..F_40 with k <= 2^12, m <= 48:");
    for r in &records {
        println!("  F_{:<2} has factor {} = {}*2^{} + 1", r.n, r.p, r.k, r.m);
        r.verify()?;
    }

    let mut db = FactorDatabase::new();
    for r in &records {
        db.insert(r.clone());
    }
    let path = std::env::temp_dir().join("fermat-factors.jsonl");
    std::fs::write(&path, db.to_file_bytes())?;
    println!("\n{} verified records written to {}", records.len(), path.display());

    let classes = classify_lists(&db, 33, 43);
    println!("indices 33..43 with a known factor:    {:?}", classes.list_a);
    println!("indices 33..43 without a known factor: {:?}", classes.list_b);
    Ok(())
}
