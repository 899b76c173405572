use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::combin::factorial;
use crate::error::{invalid, Result};

use super::permutation::Permutation;

/// Lexicographic rank of `f` among the `n!` permutations of its length, 0-based.
pub fn rank(f: &Permutation) -> BigUint {
    let n = f.len();
    let mut acc = BigUint::zero();
    // Lehmer code digit at position i, accumulated in Horner form
    for i in 0..n {
        let smaller_right = f.entries()[i + 1..]
            .iter()
            .filter(|&&v| v < f.entries()[i])
            .count();
        acc = acc * (n - i) as u64 + smaller_right as u64;
    }
    acc
}

/// Inverse of [`rank`]: the `r`-th permutation of `[n]` in lexicographic order.
pub fn unrank(r: &BigUint, n: usize) -> Result<Permutation> {
    if n == 0 {
        return invalid("unrank: n must be positive");
    }
    if *r >= factorial(n) {
        return invalid(format!("rank {r} out of range for n = {n}"));
    }
    let mut code = vec![0usize; n];
    let mut rest = r.clone();
    for i in (0..n).rev() {
        let radix = (n - i) as u64;
        code[i] = (&rest % radix).to_usize().expect("digit below radix");
        rest /= radix;
    }
    let mut pool: Vec<usize> = (1..=n).collect();
    let entries = code.into_iter().map(|c| pool.remove(c)).collect();
    Ok(Permutation::from_vec_unchecked(entries))
}

/// Convenience for small ranks.
pub fn unrank_u64(r: u64, n: usize) -> Result<Permutation> {
    unrank(&BigUint::from(r), n)
}

/// Iterates over `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: (n >= 1).then(|| (1..=n).collect()),
    }
}

/// Lexicographic successor iterator; see [`permutations`].
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}

/// Advances `v` to its lexicographic successor; false if `v` was the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank_u64(0, 3).unwrap().entries(), &[1, 2, 3]);
        assert_eq!(unrank_u64(5, 3).unwrap().entries(), &[3, 2, 1]);
        assert!(unrank_u64(6, 3).is_err());
        assert!(unrank_u64(0, 0).is_err());
    }

    #[test]
    fn rank_matches_enumeration_order() {
        let all: Vec<_> = permutations(3).map(|p| p.into_entries()).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        for n in 1..=6 {
            for (i, f) in permutations(n).enumerate() {
                assert_eq!(rank(&f), BigUint::from(i));
                assert_eq!(unrank(&BigUint::from(i), n).unwrap(), f);
            }
        }
        assert_eq!(rank(&Permutation::new(vec![2, 1, 3]).unwrap()), BigUint::from(2u32));
    }

    #[test]
    fn iterator_counts() {
        assert_eq!(permutations(1).count(), 1);
        assert_eq!(permutations(0).count(), 0);
        assert_eq!(permutations(7).count(), 5040);
    }

    #[test]
    fn large_rank_round_trip() {
        let f = Permutation::reversal(30);
        let r = rank(&f);
        assert_eq!(r, factorial(30) - 1u32);
        assert_eq!(unrank(&r, 30).unwrap(), f);
    }
}
