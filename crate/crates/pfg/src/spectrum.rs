//! Eigenvalues η_λ(k) of the k-point fixing graphs, all routes.
//!
//! The derangement graph F(n,0) admits two independent recurrences for
//! η_λ(0):
//!
//! * hook route: η_λ(0) = (−1)^h η_{λ−ĥ}(0) + (−1)^{h+λ_1} h η_{λ−ĉ}(0),
//!   where h = λ_1 + r − 1 is the corner hook size, λ−ĥ strips the first row
//!   and column, and λ−ĉ strips the first column;
//! * last-row route: η_λ(0) = (−1)^{λ_r} η_{λ−l̂}(0) + (−1)^{r−1} λ_r η_{λ−ĉ}(0).
//!
//! Both start from η_∅(0) = 1.  For 0 < k < n the eigenvalues satisfy
//! η_λ(k) = (n / (k f^λ)) Σ_j f^{μ_j} η_{μ_j}(k−1) over the one-box removals
//! μ_j of λ, and the division is always exact because the spectrum is
//! integral.  A third, fully independent route evaluates the defining
//! character sum η_λ(k) = (1/f^λ) Σ_δ N_{(δ,1^k)} χ_λ((δ,1^k)) over
//! derangement types δ ⊢ n−k.  Everything here is exact big-integer
//! arithmetic; any inexact division is reported as an internal error rather
//! than rounded.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{alternate, binomial, factorial};
use crate::character::mn_character;
use crate::error::{Error, Result};
use crate::partition::{
    class_size, dimension, enumerate_derangement_types, enumerate_partitions, Partition,
};

/// Number of derangements of n points: d_n = (−1)^n + n·d_{n−1}, d_0 = 1.
pub fn d_n(n: usize) -> BigInt {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]));
    let mut t = table.lock().unwrap();
    while t.len() <= n {
        let m = t.len();
        let next = alternate(m, BigInt::one()) + BigInt::from(m) * &t[m - 1];
        t.push(next);
    }
    t[n].clone()
}

/// |S(n,k)| = C(n,k)·d_{n−k}: the number of permutations of S_n fixing
/// exactly k points, i.e. the degree of F(n,k).
pub fn connection_set_size(n: usize, k: usize) -> BigInt {
    binomial(n, k) * d_n(n - k)
}

fn kuwong_memo() -> &'static Mutex<HashMap<Partition, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// η_λ(0) by the last-row recurrence.
pub fn eta0_kuwong(shape: &Partition) -> BigInt {
    if shape.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = kuwong_memo().lock().unwrap().get(shape) {
        return v.clone();
    }
    let last = shape.last_part();
    let rows = shape.rows();
    let without_row = eta0_kuwong(&shape.remove_last_row().expect("nonempty"));
    let without_col = eta0_kuwong(&shape.remove_first_column().expect("nonempty"));
    let value = alternate(last, without_row) + alternate(rows - 1, BigInt::from(last) * without_col);
    kuwong_memo()
        .lock()
        .unwrap()
        .insert(shape.clone(), value.clone());
    value
}

fn renteln_memo() -> &'static Mutex<HashMap<Partition, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// η_λ(0) by the corner-hook recurrence.  Agrees with [`eta0_kuwong`]
/// everywhere; keeping both routes alive is deliberate redundancy.
pub fn eta0_renteln(shape: &Partition) -> BigInt {
    if shape.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = renteln_memo().lock().unwrap().get(shape) {
        return v.clone();
    }
    let hook = shape.first_part() + shape.rows() - 1;
    let without_hook = eta0_renteln(&shape.remove_hook().expect("nonempty"));
    let without_col = eta0_renteln(&shape.remove_first_column().expect("nonempty"));
    let value = alternate(hook, without_hook)
        + alternate(hook + shape.first_part(), BigInt::from(hook) * without_col);
    renteln_memo()
        .lock()
        .unwrap()
        .insert(shape.clone(), value.clone());
    value
}

fn abs_memo() -> &'static Mutex<HashMap<Partition, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// |η_λ(0)| by the sign-free recurrence
/// |η_λ(0)| = |η_{λ−l̂}(0)| + λ_r·|η_{λ−ĉ}(0)|, valid for shapes with at
/// least two rows (the empty shape seeds the recursion with 1).
pub fn abs_eta0(shape: &Partition) -> Result<BigInt> {
    if shape.is_empty() {
        return Ok(BigInt::one());
    }
    if shape.rows() < 2 {
        return Err(Error::Domain(format!(
            "absolute-value recurrence needs at least two rows, got [{shape}]"
        )));
    }
    Ok(abs0(shape))
}

fn abs0(shape: &Partition) -> BigInt {
    if shape.is_empty() {
        return BigInt::one();
    }
    if shape.rows() == 1 {
        // single rows sit outside the recurrence's hypothesis; they unwind to
        // the derangement numbers, which are the nonnegative values |η_(m)(0)|
        return d_n(shape.first_part());
    }
    if let Some(v) = abs_memo().lock().unwrap().get(shape) {
        return v.clone();
    }
    let last = shape.last_part();
    let value = abs0(&shape.remove_last_row().expect("nonempty"))
        + BigInt::from(last) * abs0(&shape.remove_first_column().expect("nonempty"));
    abs_memo()
        .lock()
        .unwrap()
        .insert(shape.clone(), value.clone());
    value
}

fn eta_k_memo() -> &'static Mutex<HashMap<(Partition, usize), BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, usize), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// η_λ(k) for 0 ≤ k < |λ| via the one-box-removal recurrence
/// η_λ(k) = (n / (k f^λ)) Σ_j f^{μ_j} η_{μ_j}(k−1), grounded at k = 0 in the
/// last-row recurrence.  The prefactor is not integral termwise, so the
/// division happens once at the end and must be exact.
pub fn eta_k(shape: &Partition, k: usize) -> Result<BigInt> {
    let n = shape.size();
    if k >= n {
        return Err(Error::Domain(format!(
            "eigenvalue index k = {k} must be below |λ| = {n}"
        )));
    }
    if k == 0 {
        return Ok(eta0_kuwong(shape));
    }
    let key = (shape.clone(), k);
    if let Some(v) = eta_k_memo().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut sum = BigInt::zero();
    for mu in shape.one_box_removals() {
        sum += dimension(&mu) * eta_k(&mu, k - 1)?;
    }
    let numerator = BigInt::from(n) * sum;
    let denominator = BigInt::from(k) * dimension(shape);
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "η_[{shape}]({k}): {numerator} is not divisible by {denominator}"
        )));
    }
    eta_k_memo().lock().unwrap().insert(key, q.clone());
    Ok(q)
}

/// η_λ(k) straight from the defining character sum
/// η_λ(k) = (1/f^λ) Σ_δ N_{(δ,1^k)} χ_λ((δ,1^k)), δ ranging over partitions
/// of n−k with all parts ≥ 2.  Independent of every recurrence above.
pub fn eta_direct(shape: &Partition, k: usize) -> Result<BigInt> {
    let n = shape.size();
    if k >= n {
        return Err(Error::Domain(format!(
            "eigenvalue index k = {k} must be below |λ| = {n}"
        )));
    }
    let mut total = BigInt::zero();
    for delta in enumerate_derangement_types(n - k) {
        let mut parts = delta.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, k));
        let class = Partition::new(parts);
        total += class_size(&class) * mn_character(shape, &class)?;
    }
    let f = dimension(shape);
    let (q, r) = total.div_rem(&f);
    if !r.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "η_[{shape}]({k}) by character sum: {total} is not divisible by f = {f}"
        )));
    }
    Ok(q)
}

/// Predicted sign of η_λ(k) for k ∈ {0,1}, without computing the eigenvalue.
///
/// * k = 0: the sign is (−1)^{|λ|−λ_1} and never 0 (alternating sign
///   property of the derangement graph).
/// * k = 1: zero exactly for λ = (n−1,1) and λ = (2,1^{n−2}); +1 for the
///   other single-row shapes; otherwise (−1)^{|λ|−λ_1−1}.
pub fn asp_sign(shape: &Partition, k: usize) -> Result<i8> {
    let n = shape.size();
    if n < 2 {
        return Err(Error::Domain(format!(
            "sign prediction needs |λ| ≥ 2, got [{shape}]"
        )));
    }
    let below_first = n - shape.first_part();
    match k {
        0 => Ok(if below_first.is_multiple_of(2) { 1 } else { -1 }),
        1 => {
            let near_row = shape.rows() == 2 && shape.part(0) == n - 1 && shape.part(1) == 1;
            let near_column =
                shape.part(0) == 2 && shape.parts()[1..].iter().all(|&q| q == 1);
            if near_row || near_column {
                Ok(0)
            } else if shape.rows() == 1 || (below_first - 1).is_multiple_of(2) {
                Ok(1)
            } else {
                Ok(-1)
            }
        }
        _ => Err(Error::Domain(format!(
            "sign prediction covers k ∈ {{0,1}}, got k = {k}"
        ))),
    }
}

/// One row of a spectrum table: shape, eigenvalue, dimension, multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub shape: Partition,
    pub eta: BigInt,
    pub dim: BigInt,
    pub multiplicity: BigInt,
}

/// The complete spectrum of F(n,k): one entry per partition of n, in
/// enumeration order, validated against the aggregate trace identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTable {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    /// Entry for a given shape, if present.
    pub fn entry(&self, shape: &Partition) -> Option<&SpectrumEntry> {
        self.entries.iter().find(|e| &e.shape == shape)
    }
}

/// The full spectrum of F(n,k), computed by the one-box-removal recurrence
/// and checked against the aggregate identities before being returned.
pub fn spectrum(n: usize, k: usize) -> Result<SpectrumTable> {
    if n == 0 || k >= n {
        return Err(Error::Domain(format!(
            "spectrum needs 1 ≤ n and 0 ≤ k < n, got n = {n}, k = {k}"
        )));
    }
    let mut entries = Vec::new();
    for shape in enumerate_partitions(n) {
        let eta = eta_k(&shape, k)?;
        let dim = dimension(&shape);
        let multiplicity = &dim * &dim;
        entries.push(SpectrumEntry {
            shape,
            eta,
            dim,
            multiplicity,
        });
    }
    let table = SpectrumTable { n, k, entries };
    validate_table(&table)?;
    Ok(table)
}

/// Assembles and validates a spectrum table from externally supplied
/// eigenvalues (e.g. a cache).  The aggregate identities reject any value set
/// that is not the true spectrum in mass, trace, or second moment.
pub fn spectrum_from_values(
    n: usize,
    k: usize,
    values: &HashMap<Partition, BigInt>,
) -> Result<SpectrumTable> {
    if n == 0 || k >= n {
        return Err(Error::Domain(format!(
            "spectrum needs 1 ≤ n and 0 ≤ k < n, got n = {n}, k = {k}"
        )));
    }
    let mut entries = Vec::new();
    for shape in enumerate_partitions(n) {
        let eta = values
            .get(&shape)
            .ok_or_else(|| Error::Domain(format!("missing eigenvalue for [{shape}]")))?
            .clone();
        let dim = dimension(&shape);
        let multiplicity = &dim * &dim;
        entries.push(SpectrumEntry {
            shape,
            eta,
            dim,
            multiplicity,
        });
    }
    let table = SpectrumTable { n, k, entries };
    validate_table(&table)?;
    Ok(table)
}

/// The aggregate identities every true spectrum satisfies:
/// Σ f² = n!, Σ f²η = 0, Σ f²η² = n!·|S(n,k)|, the entry at λ = (n) equals
/// |S(n,k)|, and no eigenvalue exceeds it in absolute value.
fn validate_table(table: &SpectrumTable) -> Result<()> {
    let n = table.n;
    let degree = connection_set_size(n, table.k);
    let mut mass = BigInt::zero();
    let mut trace = BigInt::zero();
    let mut second = BigInt::zero();
    for e in &table.entries {
        mass += &e.multiplicity;
        trace += &e.multiplicity * &e.eta;
        second += &e.multiplicity * &e.eta * &e.eta;
        if e.eta.abs() > degree {
            return Err(Error::TableInvariant(format!(
                "|η| exceeds the degree at [{}]: {} vs {}",
                e.shape, e.eta, degree
            )));
        }
    }
    let order = factorial(n);
    if mass != order {
        return Err(Error::TableInvariant(format!(
            "multiplicity mass {mass} differs from n! = {order}"
        )));
    }
    if !trace.is_zero() {
        return Err(Error::TableInvariant(format!(
            "trace Σ f²η = {trace} must vanish"
        )));
    }
    let expected_second = order * &degree;
    if second != expected_second {
        return Err(Error::TableInvariant(format!(
            "second moment Σ f²η² = {second} differs from n!·|S| = {expected_second}"
        )));
    }
    // enumeration puts (n) first
    if table.entries[0].eta != degree {
        return Err(Error::TableInvariant(format!(
            "η at (n) is {} but the degree is {}",
            table.entries[0].eta, degree
        )));
    }
    Ok(())
}
