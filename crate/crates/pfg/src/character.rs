//! Irreducible symmetric-group characters by the Murnaghan–Nakayama rule.
//!
//! This is the crate's independent oracle: it never touches the eigenvalue
//! recurrences, so agreement between the recurrences and the direct character
//! sums is a genuine cross-check.  χ_λ(μ) is computed by border-strip
//! recursion over beta-sets, consuming the largest cycle of μ first, with a
//! process-wide memo table.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Index of a single character value: which irreducible (shape) evaluated at
/// which conjugacy class (cycle type).  Both partitions have the same size.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacterKey {
    pub shape: Partition,
    pub cycle_type: Partition,
}

fn memo() -> &'static Mutex<HashMap<CharacterKey, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<CharacterKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// χ_λ(μ), the irreducible character of S_n indexed by `shape`, evaluated on
/// the class of cycle type `cycle_type`.  Exact integer; memoized.
pub fn mn_character(shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if shape.size() != cycle_type.size() {
        return Err(Error::SizeMismatch {
            shape: shape.clone(),
            class: cycle_type.clone(),
            shape_size: shape.size(),
            class_size: cycle_type.size(),
        });
    }
    Ok(mn_eval(shape, cycle_type.parts()))
}

fn mn_eval(shape: &Partition, cycles: &[usize]) -> BigInt {
    if cycles.is_empty() {
        // sizes agree, so the shape is empty as well: χ_∅(∅) = 1
        return BigInt::one();
    }
    let key = CharacterKey {
        shape: shape.clone(),
        cycle_type: Partition::new(cycles.to_vec()),
    };
    if let Some(v) = memo().lock().unwrap().get(&key) {
        return v.clone();
    }
    let t = cycles[0];
    let rest = &cycles[1..];
    let mut total = BigInt::zero();
    for (sub, height) in border_strip_removals(shape, t) {
        let term = mn_eval(&sub, rest);
        total += if height % 2 == 0 { term } else { -term };
    }
    // compute-outside-lock: a racing thread may insert the same value first,
    // which is harmless
    memo().lock().unwrap().insert(key, total.clone());
    total
}

/// All ways to remove a border strip of `t` boxes from `shape`, with the
/// height (rows spanned minus one) of each strip.
///
/// In beta-set coordinates β_j = λ_j + r − 1 − j, removing a strip of size t
/// replaces some β_j by β_j − t, allowed exactly when the new value is
/// nonnegative and not already present; the strip height is the number of
/// beta values the moved entry passes over.
fn border_strip_removals(shape: &Partition, t: usize) -> Vec<(Partition, usize)> {
    let r = shape.rows();
    let parts = shape.parts();
    let beta: Vec<usize> = (0..r).map(|j| parts[j] + (r - 1 - j)).collect();
    let mut out = Vec::new();
    for j in 0..r {
        if beta[j] < t {
            continue;
        }
        let moved = beta[j] - t;
        if beta.contains(&moved) {
            continue;
        }
        let height = beta.iter().filter(|&&b| moved < b && b < beta[j]).count();
        let mut newbeta = beta.clone();
        newbeta[j] = moved;
        newbeta.sort_unstable_by(|a, b| b.cmp(a));
        let mut sub = Vec::with_capacity(r);
        for (i, &b) in newbeta.iter().enumerate() {
            let p = b - (r - 1 - i);
            if p > 0 {
                sub.push(p);
            }
        }
        out.push((Partition::new(sub), height));
    }
    out
}

/// Σ_j χ_{μ_j}(ν−) over the one-box removals μ_j of `shape`, where ν− drops
/// the trailing fixed point of `class_with_fixed_point`.  Restriction to
/// S_{n−1} makes this equal to χ_shape(ν) whenever ν has a fixed point.
pub fn branching_sum(shape: &Partition, class_with_fixed_point: &Partition) -> Result<BigInt> {
    if shape.size() != class_with_fixed_point.size() {
        return Err(Error::SizeMismatch {
            shape: shape.clone(),
            class: class_with_fixed_point.clone(),
            shape_size: shape.size(),
            class_size: class_with_fixed_point.size(),
        });
    }
    if class_with_fixed_point.last_part() != 1 {
        return Err(Error::Domain(format!(
            "class [{class_with_fixed_point}] has no fixed point (last part must be 1)"
        )));
    }
    let reduced = class_with_fixed_point.remove_last_row()?;
    let mut total = BigInt::zero();
    for mu in shape.one_box_removals() {
        total += mn_character(&mu, &reduced)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{class_size, dimension, enumerate_partitions};
    use crate::arith::factorial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn trivial_character_is_one() {
        for n in 1..=8 {
            for mu in enumerate_partitions(n) {
                assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn sign_character_is_class_parity() {
        for n in 1..=8 {
            let shape = Partition::new(vec![1; n]);
            for mu in enumerate_partitions(n) {
                let expected = if (n - mu.rows()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    mn_character(&shape, &mu).unwrap(),
                    BigInt::from(expected),
                    "class {mu}"
                );
            }
        }
    }

    #[test]
    fn standard_shape_on_three_cycle() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 1..=8 {
            let id = Partition::new(vec![1; n]);
            for shape in enumerate_partitions(n) {
                assert_eq!(
                    mn_character(&shape, &id).unwrap(),
                    dimension(&shape),
                    "shape {shape}"
                );
            }
        }
    }

    #[test]
    fn first_orthogonality() {
        for n in 1..=8 {
            let shapes = enumerate_partitions(n);
            let classes = enumerate_partitions(n);
            for a in &shapes {
                for b in &shapes {
                    let mut total = BigInt::zero();
                    for mu in &classes {
                        total += class_size(mu)
                            * mn_character(a, mu).unwrap()
                            * mn_character(b, mu).unwrap();
                    }
                    let expected = if a == b { factorial(n) } else { BigInt::zero() };
                    assert_eq!(total, expected, "n={n} shapes {a} / {b}");
                }
            }
        }
    }

    #[test]
    fn branching_example() {
        // χ_{(3,3,1)}((6,1)) = χ_{(3,2,1)}((6)) + χ_{(3,3)}((6))
        let lhs = mn_character(&p(&[3, 3, 1]), &p(&[6, 1])).unwrap();
        let rhs = mn_character(&p(&[3, 2, 1]), &p(&[6])).unwrap()
            + mn_character(&p(&[3, 3]), &p(&[6])).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(branching_sum(&p(&[3, 3, 1]), &p(&[6, 1])).unwrap(), lhs);
    }

    #[test]
    fn branching_on_identity_class_gives_dimension() {
        // Σ χ_{μ_j}((1^{n−1})) = Σ f^{μ_j} = f^λ
        assert_eq!(
            branching_sum(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn branching_identity_exhaustive() {
        for n in 2..=9 {
            let shapes = enumerate_partitions(n);
            // classes of S_n with at least one fixed point: ν' ⊢ n−1 plus a 1
            for smaller in enumerate_partitions(n - 1) {
                let mut parts = smaller.parts().to_vec();
                parts.push(1);
                let class = Partition::new(parts);
                for shape in &shapes {
                    assert_eq!(
                        branching_sum(shape, &class).unwrap(),
                        mn_character(shape, &class).unwrap(),
                        "shape {shape}, class {class}"
                    );
                }
            }
        }
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(matches!(
            mn_character(&p(&[2, 1]), &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            branching_sum(&p(&[2, 1]), &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn class_without_fixed_point_rejected() {
        assert!(matches!(
            branching_sum(&p(&[2, 2]), &p(&[2, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn memo_is_safe_under_concurrent_evaluation() {
        let shapes: Vec<Partition> = enumerate_partitions(8);
        let classes: Vec<Partition> = enumerate_partitions(8);
        let baseline: Vec<BigInt> = shapes
            .iter()
            .flat_map(|s| classes.iter().map(move |c| mn_character(s, c).unwrap()))
            .collect();
        std::thread::scope(|scope| {
            for _ in 0..4 {
                scope.spawn(|| {
                    let again: Vec<BigInt> = shapes
                        .iter()
                        .flat_map(|s| classes.iter().map(move |c| mn_character(s, c).unwrap()))
                        .collect();
                    assert_eq!(again, baseline);
                });
            }
        });
    }
}
