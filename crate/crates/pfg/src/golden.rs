//! Reference eigenvalue tables for k = 1, embedded at build time.
//!
//! The data file holds full tables for n = 3..10 and n = 15 and partial
//! tables (rows with a lower bound on the first part) for n = 11, 12, 13.
//! `check_tables` recomputes every listed eigenvalue from scratch and
//! reports any mismatch; an empty diff list is the reproduction criterion
//! the build stands on.

use num_bigint::BigInt;

use crate::error::Result;
use crate::partition::Partition;
use crate::spectrum::spectrum;

const RAW_TABLES: &str = include_str!("../data/eigentables_k1.txt");

/// One table block: all shapes of n, or only those with first part ≥ bound.
pub struct GoldenBlock {
    pub n: usize,
    pub min_first_part: Option<usize>,
    /// Rows in reverse-lexicographic shape order, as printed.
    pub rows: Vec<(Partition, BigInt)>,
}

/// Parses the embedded data.  Panics on malformed lines: the file ships
/// inside the binary, so any parse failure is a build defect, not an input
/// error.
pub fn golden_blocks() -> Vec<GoldenBlock> {
    fn bad(idx: usize, line: &str, what: &str) -> ! {
        panic!("embedded table line {}: {what}: {line}", idx + 1)
    }
    let mut blocks: Vec<GoldenBlock> = Vec::new();
    for (idx, line) in RAW_TABLES.lines().enumerate() {
        if let Some(header) = line.strip_prefix("table ") {
            let fields: Vec<&str> = header.split(' ').collect();
            let block = match fields.as_slice() {
                [n, "full"] => GoldenBlock {
                    n: n.parse().unwrap_or_else(|_| bad(idx, line, "bad n")),
                    min_first_part: None,
                    rows: Vec::new(),
                },
                [n, "min-first-part", b] => GoldenBlock {
                    n: n.parse().unwrap_or_else(|_| bad(idx, line, "bad n")),
                    min_first_part: Some(b.parse().unwrap_or_else(|_| bad(idx, line, "bad bound"))),
                    rows: Vec::new(),
                },
                _ => bad(idx, line, "bad header"),
            };
            blocks.push(block);
        } else {
            let Some((shape_s, eta_s)) = line.split_once(' ') else {
                bad(idx, line, "bad row");
            };
            let shape: Partition = shape_s
                .parse()
                .unwrap_or_else(|_| bad(idx, line, "bad shape"));
            let eta: BigInt = eta_s
                .parse()
                .unwrap_or_else(|_| bad(idx, line, "bad value"));
            let Some(block) = blocks.last_mut() else {
                bad(idx, line, "row before header");
            };
            if shape.size() != block.n {
                bad(idx, line, "shape size differs from block n");
            }
            block.rows.push((shape, eta));
        }
    }
    blocks
}

/// Recomputes every embedded eigenvalue and returns one line per mismatch
/// (missing shape, extra shape, or differing value).  Empty means the
/// computation reproduces the tables exactly.
pub fn check_tables() -> Result<Vec<String>> {
    let mut diffs = Vec::new();
    for block in golden_blocks() {
        let table = spectrum(block.n, 1)?;
        let computed: Vec<(&Partition, &BigInt)> = table
            .entries
            .iter()
            .filter(|e| block.min_first_part.is_none_or(|b| e.shape.part(0) >= b))
            .map(|e| (&e.shape, &e.eta))
            .collect();
        if computed.len() != block.rows.len() {
            diffs.push(format!(
                "n={}: table lists {} rows, computation yields {}",
                block.n,
                block.rows.len(),
                computed.len()
            ));
            continue;
        }
        for ((shape, listed), (c_shape, c_eta)) in block.rows.iter().zip(computed) {
            if shape != c_shape {
                diffs.push(format!(
                    "n={}: table row {shape} out of order, expected {c_shape}",
                    block.n
                ));
            } else if listed != c_eta {
                diffs.push(format!(
                    "n={} lambda={shape}: computed {c_eta}, table lists {listed}",
                    block.n
                ));
            }
        }
    }
    Ok(diffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lookup(n: usize, shape: &str) -> BigInt {
        let target: Partition = shape.parse().unwrap();
        golden_blocks()
            .iter()
            .find(|b| b.n == n)
            .expect("block present")
            .rows
            .iter()
            .find(|(s, _)| *s == target)
            .expect("row present")
            .1
            .clone()
    }

    #[test]
    fn blocks_are_complete_and_ordered() {
        let blocks = golden_blocks();
        let summary: Vec<(usize, Option<usize>, usize)> = blocks
            .iter()
            .map(|b| (b.n, b.min_first_part, b.rows.len()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (3, None, 3),
                (4, None, 5),
                (5, None, 7),
                (6, None, 11),
                (7, None, 15),
                (8, None, 22),
                (9, None, 30),
                (10, None, 42),
                (11, Some(5), 29),
                (12, Some(6), 30),
                (13, Some(6), 44),
                (15, None, 176),
            ]
        );
        for block in &blocks {
            for pair in block.rows.windows(2) {
                assert!(
                    pair[0].0.parts() > pair[1].0.parts(),
                    "rows out of order at n={}",
                    block.n
                );
            }
            if let Some(bound) = block.min_first_part {
                assert!(block.rows.iter().all(|(s, _)| s.part(0) >= bound));
            }
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(lookup(6, "3,2,1"), BigInt::from(9));
        assert_eq!(lookup(9, "3,2,1,1,1,1"), BigInt::from(-39));
        assert_eq!(lookup(10, "5,5"), BigInt::from(1280));
        assert_eq!(lookup(13, "7,6"), BigInt::from(-36155));
        assert_eq!(lookup(15, "2,1,1,1,1,1,1,1,1,1,1,1,1,1"), BigInt::from(0));
        assert_eq!(lookup(15, "15"), BigInt::from(481066515735i64));
        assert_eq!(lookup(11, "11"), BigInt::from(14684571));
    }

    #[test]
    fn tables_reproduce_exactly() {
        let diffs = check_tables().unwrap();
        assert!(diffs.is_empty(), "{diffs:?}");
    }
}
