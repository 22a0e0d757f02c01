//! Exact big-integer helpers shared across the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        // the running product of i+1 consecutive integers is divisible by (i+1)!
        let (q, r) = acc.div_rem(&BigInt::from(i + 1));
        debug_assert!(r.is_zero());
        acc = q;
        let _ = r;
    }
    acc
}

/// (-1)^e applied to a value.
pub fn alternate(e: usize, value: BigInt) -> BigInt {
    if e.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
        // 20! overflows u64 comfortably within BigInt
        assert_eq!(
            factorial(20).to_string(),
            "2432902008176640000"
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(52, 26).to_string(), "495918532948104");
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
    }

    #[test]
    fn alternate_flips_odd() {
        assert_eq!(alternate(0, BigInt::from(7)), BigInt::from(7));
        assert_eq!(alternate(3, BigInt::from(7)), BigInt::from(-7));
        assert_eq!(alternate(4, BigInt::from(-2)), BigInt::from(-2));
    }
}
