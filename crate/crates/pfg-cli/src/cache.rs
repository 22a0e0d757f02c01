//! JSON-lines persistence for computed eigenvalue tables.
//!
//! One file per (n,k), named `eta_<n>_<k>.jsonl`, one record per shape.
//! Loads are never trusted blindly: corrupt lines are skipped with a
//! warning, duplicated or incomplete files are discarded outright, and a
//! random sample of records is recomputed from scratch before the table is
//! handed to the caller (who revalidates the aggregate identities anyway).

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use pfg::partition::enumerate_partitions;
use pfg::spectrum::eta_k;
use pfg::{Partition, SpectrumTable};

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct EigenCacheRecord {
    pub n: usize,
    pub k: usize,
    /// Comma-joined shape, e.g. "3,2".
    pub lambda: String,
    /// Decimal eigenvalue; a string so arbitrarily wide values survive JSON.
    pub eta: String,
}

pub fn table_path(dir: &Path, n: usize, k: usize) -> PathBuf {
    dir.join(format!("eta_{n}_{k}.jsonl"))
}

/// Reads a cached table.  Returns None (after a warning) whenever anything
/// about the file falls short: the caller recomputes and overwrites.
pub fn load_validated(dir: &Path, n: usize, k: usize) -> Option<HashMap<Partition, BigInt>> {
    let path = table_path(dir, n, k);
    let text = fs::read_to_string(&path).ok()?;
    let mut values: HashMap<Partition, BigInt> = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let warn =
            |what: &str| eprintln!("warning: {}:{}: skipping line: {what}", path.display(), idx + 1);
        let record: EigenCacheRecord = match serde_json::from_str(line) {
            Ok(r) => r,
            Err(_) => {
                warn("not a cache record");
                continue;
            }
        };
        if record.n != n || record.k != k {
            warn("record belongs to a different table");
            continue;
        }
        let Ok(shape) = record.lambda.parse::<Partition>() else {
            warn("unparsable shape");
            continue;
        };
        let Ok(eta) = record.eta.parse::<BigInt>() else {
            warn("unparsable eigenvalue");
            continue;
        };
        if values.insert(shape, eta).is_some() {
            eprintln!(
                "warning: {}: duplicate shape, discarding cache",
                path.display()
            );
            return None;
        }
    }
    let shapes = enumerate_partitions(n);
    if values.len() != shapes.len() || shapes.iter().any(|s| !values.contains_key(s)) {
        eprintln!("warning: {}: incomplete table, recomputing", path.display());
        return None;
    }
    // spot-check a 1% random sample (at least one record) against a fresh
    // computation
    let mut rng = rand::rng();
    let samples = (shapes.len() / 100).max(1);
    for _ in 0..samples {
        let shape = &shapes[rng.random_range(0..shapes.len())];
        let fresh = eta_k(shape, k).ok()?;
        if values[shape] != fresh {
            eprintln!(
                "warning: {}: stale value for [{shape}], recomputing",
                path.display()
            );
            return None;
        }
    }
    Some(values)
}

/// Writes a table, one record per entry in table order.
pub fn store(dir: &Path, table: &SpectrumTable) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut out = String::new();
    for entry in &table.entries {
        let record = EigenCacheRecord {
            n: table.n,
            k: table.k,
            lambda: entry.shape.to_string(),
            eta: entry.eta.to_string(),
        };
        out.push_str(&serde_json::to_string(&record).map_err(std::io::Error::other)?);
        out.push('\n');
    }
    fs::write(table_path(dir, table.n, table.k), out)
}
