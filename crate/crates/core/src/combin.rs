//! Exact factorials and binomials.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        // exact at every step: acc = C(n - k + i + 1, i + 1)
        acc = acc * (n as u64 - k as u64 + i + 1) / (i + 1);
    }
    acc
}

/// `n!` when it fits in a `u64` (n ≤ 20).
pub fn factorial_u64(n: usize) -> Option<u64> {
    (2..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))
}
