//! Integer partitions and Ferrers-diagram surgery.
//!
//! A partition λ = (λ_1, …, λ_r) is a weakly decreasing sequence of positive
//! integers; it simultaneously indexes the conjugacy classes and the
//! irreducible characters of the symmetric group S_n, n = |λ|.  This module
//! owns enumeration, the hook-length grid, irreducible dimensions f^λ,
//! conjugacy class sizes n!/z_λ, and the diagram operations (hook removal,
//! first-column removal, last-row removal, one-box removals) that drive the
//! eigenvalue recurrences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty sequence is
/// the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// Panics if any part is zero or the sequence increases anywhere.
    pub fn new(parts: Vec<usize>) -> Self {
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing: {:?}", parts);
        }
        assert!(!parts.contains(&0), "parts must be positive: {:?}", parts);
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows r.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 0-based; 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part λ_1, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Last part λ_r, or 0 for the empty partition.
    pub fn last_part(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    /// λ − ĥ: strip the hook of the corner box (first row and first column);
    /// what remains is the subdiagram at rows ≥ 2, columns ≥ 2, i.e.
    /// (λ_2 − 1, …, λ_r − 1) with zero parts dropped.
    pub fn remove_hook(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition { op: "remove_hook" });
        }
        let parts = self.parts[1..]
            .iter()
            .filter(|&&p| p > 1)
            .map(|&p| p - 1)
            .collect();
        Ok(Partition { parts })
    }

    /// λ − ĉ: delete the first column, giving (λ_1 − 1, …, λ_r − 1) with zero
    /// parts dropped.
    pub fn remove_first_column(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition {
                op: "remove_first_column",
            });
        }
        let parts = self
            .parts
            .iter()
            .filter(|&&p| p > 1)
            .map(|&p| p - 1)
            .collect();
        Ok(Partition { parts })
    }

    /// λ − l̂: delete the last row, giving (λ_1, …, λ_{r−1}).
    pub fn remove_last_row(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition {
                op: "remove_last_row",
            });
        }
        Ok(Partition {
            parts: self.parts[..self.parts.len() - 1].to_vec(),
        })
    }

    /// All μ ⊢ n−1 obtained by removing one box from the end of a row so that
    /// the result is still a partition, ordered by the row the box came from.
    pub fn one_box_removals(&self) -> Vec<Partition> {
        let r = self.parts.len();
        let mut out = Vec::new();
        for i in 0..r {
            let removable = i + 1 == r || self.parts[i] > self.parts[i + 1];
            if removable {
                let mut next = self.parts.clone();
                next[i] -= 1;
                if next[i] == 0 {
                    next.pop();
                }
                out.push(Partition { parts: next });
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    /// Comma-joined decimal parts, e.g. `3,2,1,1`; the empty partition prints
    /// as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Inverse of `Display`: the empty string parses to the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Domain(format!("bad partition literal {s:?}")))?;
            if p == 0 {
                return Err(Error::Domain(format!("bad partition literal {s:?}")));
            }
            parts.push(p);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts not weakly decreasing in {s:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

/// Hook lengths of every box of a Ferrers diagram, indexed (row, column)
/// starting at (1,1).
pub struct HookGrid {
    rows: Vec<Vec<usize>>,
}

impl HookGrid {
    /// Hook length at 1-indexed (row a, column b), if that box exists.
    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.rows.get(a - 1)?.get(b - 1).copied()
    }

    /// The corner hook length h_λ(1,1) = λ_1 + r − 1, the hook size of the
    /// whole partition.  Panics on the empty diagram.
    pub fn corner(&self) -> usize {
        self.rows[0][0]
    }

    /// All hook lengths in row-major order.
    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Product of all hook lengths, Π h_λ(a,b).
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::one();
        for h in self.values() {
            acc *= h;
        }
        acc
    }
}

/// Hook lengths h_λ(a,b) = arm + leg + 1 for every box of λ.
pub fn hook_lengths(shape: &Partition) -> HookGrid {
    let parts = shape.parts();
    let r = parts.len();
    // column heights: conj[j] = number of rows whose length exceeds j
    let width = shape.first_part();
    let mut conj = vec![0usize; width];
    for &p in parts {
        for c in conj.iter_mut().take(p) {
            *c += 1;
        }
    }
    let mut rows = Vec::with_capacity(r);
    for (i, &p) in parts.iter().enumerate() {
        let row = conj[..p]
            .iter()
            .enumerate()
            .map(|(j, &height)| {
                let arm = p - j - 1;
                let leg = height - i - 1;
                arm + leg + 1
            })
            .collect();
        rows.push(row);
    }
    HookGrid { rows }
}

/// Dimension f^λ of the irreducible character indexed by λ: n! divided by
/// the product of all hook lengths.  Equals the number of standard Young
/// tableaux of shape λ.
pub fn dimension(shape: &Partition) -> BigInt {
    let (q, r) = factorial(shape.size()).div_rem(&hook_lengths(shape).product());
    assert!(r.is_zero(), "hook product must divide n! for {shape:?}");
    q
}

/// Size of the conjugacy class of cycle type λ in S_n, n = |λ|: n!/z_λ with
/// z_λ = Π_j j^{m_j} m_j! over cycle lengths j of multiplicity m_j.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i];
        let mut mult = 0usize;
        while i < parts.len() && parts[i] == j {
            mult += 1;
            i += 1;
        }
        z *= BigInt::from(j).pow(mult as u32);
        z *= factorial(mult);
    }
    let (q, r) = factorial(cycle_type.size()).div_rem(&z);
    assert!(r.is_zero(), "z must divide n! for {cycle_type:?}");
    q
}

/// Every partition of n exactly once, in reverse lexicographic order:
/// (n) first, (1,1,…,1) last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

/// All partitions of m with every part ≥ 2, in reverse lexicographic order.
/// These are the cycle types of the derangements of S_m; there are none for
/// m = 1, and only the empty type for m = 0.
pub fn enumerate_derangement_types(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend_min(m, m, 2, &mut prefix, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    descend_min(remaining, max_part, 1, prefix, out)
}

fn descend_min(
    remaining: usize,
    max_part: usize,
    min_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    let hi = remaining.min(max_part);
    for next in (min_part..=hi).rev() {
        prefix.push(next);
        descend_min(remaining - next, next, min_part, prefix, out);
        prefix.pop();
    }
}
