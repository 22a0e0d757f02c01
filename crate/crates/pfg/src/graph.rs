//! Ground truth at desk scale: F(n,k) as an explicit graph on all n!
//! permutations.
//!
//! The spectrum claims are checked against this construction through closed
//! walk counts: tr(A^m) computed by integer sparse row iteration must equal
//! Σ_λ (f^λ)²·η_λ(k)^m.  No numeric eigensolver is involved anywhere, so
//! there is no tolerance to tune; every comparison is exact.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::spectrum::connection_set_size;

/// A permutation of {1..n} in one-line notation: `images[i-1]` is the image
/// of i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its one-line images.  Panics unless the
    /// sequence is a bijection on {1..n}.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            assert!(
                (1..=n).contains(&x) && !seen[x],
                "not a permutation of 1..={n}: {images:?}"
            );
            seen[x] = true;
        }
        Perm { images }
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a point, 1-based.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Perm { images: inv }
    }

    /// Number of points with p(i) = i.
    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| x == i + 1)
            .count()
    }

    /// Cycle lengths, weakly decreasing; a partition of n.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths)
    }
}

/// All permutations of {1..n} in lexicographic order of their one-line
/// images.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm {
                images: cur.clone(),
            });
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(n, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out
}

/// F(n,k) with every vertex and edge materialized.  Vertices are all n!
/// permutations in lexicographic order; g ~ h exactly when g·h⁻¹ fixes k
/// points.
pub struct CayleyGraphInstance {
    pub n: usize,
    pub k: usize,
    vertices: Vec<Perm>,
    adjacency: Vec<Vec<u32>>,
}

impl CayleyGraphInstance {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Perm] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    /// Common vertex degree (the graph is regular).
    pub fn degree(&self) -> usize {
        self.adjacency[0].len()
    }

    /// One line per vertex: `<vertex-index>: <sorted neighbor indices>`.
    pub fn adjacency_dump(&self) -> String {
        let mut out = String::new();
        for (v, row) in self.adjacency.iter().enumerate() {
            out.push_str(&v.to_string());
            out.push(':');
            for u in row {
                out.push(' ');
                out.push_str(&u.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Builds F(n,k) explicitly.  Hard cap n ≤ 7: 8! vertices with thousands of
/// neighbors each is past desk scale.  The construction verifies the degree
/// C(n,k)·d_{n−k} at every vertex before returning.
pub fn build_graph(n: usize, k: usize) -> Result<CayleyGraphInstance> {
    if n == 0 || k >= n {
        return Err(Error::Domain(format!(
            "graph needs 1 ≤ n and 0 ≤ k < n, got n = {n}, k = {k}"
        )));
    }
    if n > 7 {
        return Err(Error::Domain(format!(
            "explicit graph construction is capped at n ≤ 7, got n = {n}"
        )));
    }
    let vertices = all_perms(n);
    let index: HashMap<&[usize], u32> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images(), i as u32))
        .collect();
    let connection: Vec<&Perm> = vertices
        .iter()
        .filter(|p| p.fixed_point_count() == k)
        .collect();
    let expected = connection_set_size(n, k)
        .to_usize()
        .expect("degree fits a machine word at desk scale");
    let mut adjacency = Vec::with_capacity(vertices.len());
    for h in &vertices {
        let mut row: Vec<u32> = connection
            .iter()
            .map(|s| index[s.compose(h).images()])
            .collect();
        row.sort_unstable();
        if row.len() != expected {
            return Err(Error::InternalConsistency(format!(
                "vertex {h:?} has degree {} but C(n,k)·d_(n−k) = {expected}",
                row.len()
            )));
        }
        adjacency.push(row);
    }
    Ok(CayleyGraphInstance {
        n,
        k,
        vertices,
        adjacency,
    })
}

/// tr(A^m), the number of closed m-walks, for 0 ≤ m ≤ 6.
///
/// Uses one row of A² (and A³ for m ≥ 5) at a time, so memory stays linear
/// in the vertex count while every count is exact.
pub fn trace_moment(graph: &CayleyGraphInstance, m: usize) -> BigInt {
    assert!(m <= 6, "trace moments supported for m ≤ 6, got {m}");
    let v_count = graph.vertex_count();
    match m {
        0 => return BigInt::from(v_count),
        1 => return BigInt::zero(),
        2 => return BigInt::from(v_count as u128 * graph.degree() as u128),
        _ => {}
    }
    let mut total: u128 = 0;
    let mut row2 = vec![0u32; v_count];
    let mut row3 = vec![0u64; v_count];
    for v in 0..v_count {
        row2.fill(0);
        for &w in graph.neighbors(v) {
            for &u in graph.neighbors(w as usize) {
                row2[u as usize] += 1;
            }
        }
        match m {
            3 => {
                let s: u64 = graph
                    .neighbors(v)
                    .iter()
                    .map(|&u| row2[u as usize] as u64)
                    .sum();
                total += s as u128;
            }
            4 => {
                // (A⁴)[v][v] = Σ_u (A²)[v][u]² by symmetry
                total += row2.iter().map(|&c| c as u128 * c as u128).sum::<u128>();
            }
            _ => {
                for (u, slot) in row3.iter_mut().enumerate() {
                    *slot = graph
                        .neighbors(u)
                        .iter()
                        .map(|&w| row2[w as usize] as u64)
                        .sum();
                }
                if m == 5 {
                    total += row2
                        .iter()
                        .zip(&row3)
                        .map(|(&a, &b)| a as u128 * b as u128)
                        .sum::<u128>();
                } else {
                    total += row3.iter().map(|&c| c as u128 * c as u128).sum::<u128>();
                }
            }
        }
    }
    BigInt::from(total)
}

/// Checks that the permutations fixing exactly k points are precisely the
/// S_n-conjugates of the extended derangements of S_{n−k}, by explicit
/// enumeration of both sides.  Supported for n ≤ 7.
pub fn class_union_check(n: usize, k: usize) -> bool {
    assert!(n <= 7, "explicit enumeration is capped at n ≤ 7");
    assert!(k < n);
    let perms = all_perms(n);
    let lhs: HashSet<&Perm> = perms
        .iter()
        .filter(|p| p.fixed_point_count() == k)
        .collect();
    let mut rhs: HashSet<Perm> = HashSet::new();
    for beta in all_perms(n - k) {
        if beta.fixed_point_count() != 0 {
            continue;
        }
        // extension of β to S_n: identity above n−k
        let mut images = beta.images().to_vec();
        images.extend(n - k + 1..=n);
        let extended = Perm::from_images(images);
        for sigma in &perms {
            rhs.insert(sigma.inverse().compose(&extended).compose(sigma));
        }
    }
    lhs.len() == rhs.len() && rhs.iter().all(|p| lhs.contains(p))
}
