//! Ball sizes, the ball-packing bound and the greedy existence inequality,
//! all in exact integer or rational arithmetic.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combin::{binomial, factorial};
use crate::error::{invalid, Result};

/// `|B_r(n)|`: permutations within Kendall distance `r` of a fixed center.
///
/// Sums the first `r + 1` coefficients of `Π_{i=1}^{n} (1 + x + ... + x^{i-1})`,
/// the generating function of the inversion number, truncated at degree `r`.
pub fn ball_size_exact(n: usize, r: u64) -> Result<BigUint> {
    let max = (n * n.saturating_sub(1) / 2) as u64;
    if r > max {
        return invalid(format!("radius {r} exceeds the diameter {max} of S_{n}"));
    }
    let r = r as usize;
    let mut coeffs = vec![BigUint::zero(); r + 1];
    coeffs[0] = BigUint::one();
    for i in 2..=n {
        // multiply by 1 + x + ... + x^{i-1} with a sliding window sum
        let mut next = vec![BigUint::zero(); r + 1];
        let mut window = BigUint::zero();
        for deg in 0..=r {
            window += &coeffs[deg];
            if deg >= i {
                window -= &coeffs[deg - i];
            }
            next[deg] = window.clone();
        }
        coeffs = next;
    }
    Ok(coeffs.into_iter().sum())
}

/// Upper bound `C(n + r - 1, n - 1) >= |B_r(n)|`.
pub fn ball_size_upper(n: usize, r: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    binomial(n + r as usize - 1, n - 1)
}

/// `⌊n! / |B_r(n)|⌋` with `r = ⌊(d-1)/2⌋`, clamped to the diameter.
pub fn packing_bound(n: usize, d: u64) -> BigUint {
    let r = clamped_radius(n, d);
    factorial(n) / ball_size_exact(n, r).expect("radius clamped")
}

fn clamped_radius(n: usize, d: u64) -> u64 {
    (d.saturating_sub(1) / 2).min((n * n.saturating_sub(1) / 2) as u64)
}

/// Both sides of the greedy existence inequality plus ball statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: u64,
    /// `⌊(d-1)/2⌋`, clamped to the diameter of `S_n`.
    pub r: u64,
    pub ball_exact: BigUint,
    pub ball_upper: BigUint,
    pub packing_bound: BigUint,
    /// `Σ_{i=1}^{d-1} C(k+i-2, i) · C(d-i-1+n-k, n-k) · 2^{min(d-i-1, n-k)}`.
    pub gv_lhs: BigUint,
    /// `n! / k!`.
    pub gv_rhs: BigUint,
    /// `gv_lhs < gv_rhs`: greedy search is guaranteed to find an `[n, k, d]` code.
    pub gv_satisfied: bool,
}

/// Left side of the greedy existence inequality.
pub fn greedy_lhs(n: usize, k: usize, d: u64) -> BigUint {
    let d = d as usize;
    let red = n - k;
    (1..d)
        .map(|i| {
            let gap = d - i - 1;
            binomial(k + i - 2, i) * binomial(gap + red, red) * (BigUint::one() << gap.min(red))
        })
        .sum()
}

/// Evaluates the greedy existence inequality for an `[n, k, d]` code.
pub fn theorem2_check(n: usize, k: usize, d: u64) -> Result<BoundReport> {
    if k < 2 || k >= n {
        return invalid(format!("need 2 <= k < n, got k = {k}, n = {n}"));
    }
    if d == 0 {
        return invalid("distance must be positive");
    }
    let r = clamped_radius(n, d);
    let ball_exact = ball_size_exact(n, r)?;
    let gv_lhs = greedy_lhs(n, k, d);
    let gv_rhs = (k + 1..=n).fold(BigUint::one(), |acc, i| acc * i);
    Ok(BoundReport {
        n,
        k,
        d,
        r,
        ball_upper: ball_size_upper(n, r),
        packing_bound: factorial(n) / &ball_exact,
        ball_exact,
        gv_satisfied: gv_lhs < gv_rhs,
        gv_lhs,
        gv_rhs,
    })
}

/// Largest `k` in `2..n` satisfying the existence inequality, or 0.
pub fn max_k_theorem2(n: usize, d: u64) -> usize {
    (2..n)
        .rev()
        .find(|&k| {
            let rhs = (k + 1..=n).fold(BigUint::one(), |acc, i| acc * i);
            greedy_lhs(n, k, d) < rhs
        })
        .unwrap_or(0)
}

/// `ψ_d(k) = (k!/(k+d)!) Σ_{i=1}^{d-1} C(k+i, i) C(2d-1-i, d) 2^{d-i-1}`.
pub fn psi(d: usize, k: usize) -> Result<BigRational> {
    if d < 2 || k < 2 {
        return invalid(format!("need d, k >= 2, got d = {d}, k = {k}"));
    }
    let sum: BigUint = (1..d)
        .map(|i| binomial(k + i, i) * binomial(2 * d - 1 - i, d) * (BigUint::one() << (d - i - 1)))
        .sum();
    let denom = (k + 1..=k + d).fold(BigUint::one(), |acc, i| acc * i);
    Ok(BigRational::new(sum.into(), denom.into()))
}

/// `ξ(d) = C(2d-2, d) 2^{d-2} / (d-1)!`.
pub fn xi(d: usize) -> Result<BigRational> {
    if d < 2 {
        return invalid(format!("need d >= 2, got {d}"));
    }
    let num = binomial(2 * d - 2, d) << (d - 2);
    Ok(BigRational::new(num.into(), factorial(d - 1).into()))
}

/// Growth regime of the minimum distance `d` as a function of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `d = O(n)`.
    Linear,
    /// `d = Θ(n^{1+ε})` with `0 < ε < 1`.
    Polynomial(BigRational),
    /// `d = Θ(n²)`.
    Quadratic,
}

/// Capacity of systematic codes in the given regime: `1`, `1 - ε` or `0`.
pub fn capacity(regime: &Regime) -> Result<BigRational> {
    match regime {
        Regime::Linear => Ok(BigRational::one()),
        Regime::Quadratic => Ok(BigRational::zero()),
        Regime::Polynomial(eps) => {
            if *eps <= BigRational::zero() || *eps >= BigRational::one() {
                return invalid(format!("epsilon {eps} outside (0, 1)"));
            }
            Ok(BigRational::one() - eps)
        }
    }
}
