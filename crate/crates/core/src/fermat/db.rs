//! Append-only factor database: newline-delimited records with a trailing
//! checksum line, plus the list (A)/(B) classification built on top of it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fermat::{fullness_check, Fullness};
use crate::ntkernel::{probable_prime, residue_trace, DEFAULT_MR_ROUNDS};

/// A verified prime divisor p = k*2^m + 1 of F_n, with discovery metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub n: u32,
    pub k: u64,
    pub m: u32,
    /// Decimal string in the file format; exact value k*2^m + 1.
    #[serde(with = "biguint_decimal")]
    pub p: BigUint,
    pub method: String,
    pub verified: bool,
    pub timestamp: String,
}

mod biguint_decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| de::Error::custom(format!("bad decimal integer {s:?}")))
    }
}

impl FactorRecord {
    /// Shape consistency plus the mathematical claims: p = k*2^m + 1 is
    /// prime, satisfies Lucas fullness for n, and its residue trace hits -1
    /// exactly at index n.
    pub fn verify(&self) -> Result<()> {
        let expected = (BigUint::from(self.k) << self.m) + 1u32;
        if self.p != expected {
            return Err(Error::Verification(format!(
                "record (n={}, p={}): p != k*2^m + 1",
                self.n, self.p
            )));
        }
        if !probable_prime(&self.p, DEFAULT_MR_ROUNDS)?.is_prime() {
            return Err(Error::Verification(format!("record (n={}, p={}): p is not prime", self.n, self.p)));
        }
        if !fullness_check(&self.p, self.n, Fullness::Lucas) {
            return Err(Error::Verification(format!(
                "record (n={}, p={}): p != 1 (mod 2^{})",
                self.n,
                self.p,
                self.n + 2
            )));
        }
        let trace = residue_trace(&self.p, u64::from(self.n) + 1)?;
        if trace.hit_index != Some(u64::from(self.n)) {
            return Err(Error::Verification(format!(
                "record (n={}, p={}): residue trace does not hit -1 at {}",
                self.n, self.p, self.n
            )));
        }
        Ok(())
    }
}

/// In-memory view of the factor file, keyed by (n, p); duplicates are
/// rejected on insert and on load.
#[derive(Debug, Clone, Default)]
pub struct FactorDatabase {
    records: BTreeMap<(u32, BigUint), FactorRecord>,
}

const CHECKSUM_PREFIX: &str = "#sha256=";

impl FactorDatabase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &FactorRecord> {
        self.records.values()
    }

    /// Insert a record; duplicates of (n, p) are ignored, returning false.
    pub fn insert(&mut self, record: FactorRecord) -> bool {
        let key = (record.n, record.p.clone());
        if self.records.contains_key(&key) {
            return false;
        }
        self.records.insert(key, record);
        true
    }

    pub fn indices_with_records(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .records
            .values()
            .filter(|r| r.verified)
            .map(|r| r.n)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Serialize to the file format: one JSON object per line, then a
    /// checksum line over all preceding bytes.
    pub fn to_file_bytes(&self) -> String {
        let mut body = String::new();
        for record in self.records.values() {
            let line = serde_json::to_string(record).expect("record serializes");
            body.push_str(&line);
            body.push('\n');
        }
        let digest = Sha256::digest(body.as_bytes());
        let mut out = body;
        let _ = writeln!(out, "{CHECKSUM_PREFIX}{}", hex_encode(&digest));
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_file_bytes())?;
        Ok(())
    }

    /// Load and re-verify. Checksum corruption is a hard error naming the
    /// byte offset of the checksum line; record-level failures mark the
    /// record unverified and are listed in the returned report.
    pub fn load(path: &Path) -> Result<(Self, DbVerifyReport)> {
        let content = fs::read_to_string(path)?;
        Self::from_file_str(&content)
    }

    pub fn from_file_str(content: &str) -> Result<(Self, DbVerifyReport)> {
        let mut db = FactorDatabase::new();
        let mut report = DbVerifyReport::default();
        let mut body_end = 0usize;
        let mut checksum_line: Option<(usize, String)> = None;
        let mut offset = 0usize;
        for line in content.split_inclusive('\n') {
            let trimmed = line.trim_end_matches('\n');
            if trimmed.starts_with(CHECKSUM_PREFIX) {
                checksum_line = Some((offset, trimmed.to_string()));
                body_end = offset;
            }
            offset += line.len();
        }
        match checksum_line {
            None if content.trim().is_empty() => {
                report.checksum_ok = true;
                return Ok((db, report));
            }
            None => {
                return Err(Error::Verification(format!(
                    "missing checksum line at end of file (expected at byte offset {})",
                    content.len()
                )));
            }
            Some((chk_offset, line)) => {
                let expected = line.trim_start_matches(CHECKSUM_PREFIX);
                let digest = hex_encode(&Sha256::digest(content[..body_end].as_bytes()));
                if digest != expected {
                    return Err(Error::Verification(format!(
                        "checksum mismatch for checksum line at byte offset {chk_offset}: file says {expected}, content hashes to {digest}"
                    )));
                }
                report.checksum_ok = true;
            }
        }
        for (idx, line) in content[..body_end].lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut record: FactorRecord = serde_json::from_str(line)
                .map_err(|e| Error::Parse(format!("record on line {}: {e}", idx + 1)))?;
            match record.verify() {
                Ok(()) => {
                    record.verified = true;
                    report.passed.push((record.n, record.p.to_string()));
                }
                Err(e) => {
                    record.verified = false;
                    report.failed.push((record.n, record.p.to_string(), e.to_string()));
                }
            }
            if !db.insert(record) {
                return Err(Error::Verification(format!("duplicate record on line {}", idx + 1)));
            }
        }
        Ok((db, report))
    }
}

fn hex_encode(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Outcome of re-verifying every record in a database file.
#[derive(Debug, Clone, Default, Serialize)]
pub struct DbVerifyReport {
    pub checksum_ok: bool,
    pub passed: Vec<(u32, String)>,
    pub failed: Vec<(u32, String, String)>,
}

impl DbVerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checksum_ok && self.failed.is_empty()
    }
}

/// The partition of a Fermat-index range into list (A), indices with at
/// least one verified factor on file, and list (B), indices with none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n_lo: u32,
    pub n_hi: u32,
    pub list_a: Vec<u32>,
    pub list_b: Vec<u32>,
    /// (n, p) pairs excluded because the record is unverified.
    pub excluded_unverified: Vec<(u32, String)>,
}

/// Partition [n_lo, n_hi] by presence of a verified factor record.
pub fn classify_lists(db: &FactorDatabase, n_lo: u32, n_hi: u32) -> ClassificationReport {
    let known: Vec<u32> = db.indices_with_records();
    let excluded: Vec<(u32, String)> = db
        .records()
        .filter(|r| !r.verified)
        .map(|r| (r.n, r.p.to_string()))
        .collect();
    let mut list_a = Vec::new();
    let mut list_b = Vec::new();
    for n in n_lo..=n_hi {
        if known.binary_search(&n).is_ok() {
            list_a.push(n);
        } else {
            list_b.push(n);
        }
    }
    ClassificationReport {
        n_lo,
        n_hi,
        list_a,
        list_b,
        excluded_unverified: excluded,
    }
}
