use crate::error::{invalid, Result};

use super::permutation::{check_same_len, Permutation};

/// Which distance a code is designed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    /// Kendall's τ (adjacent-transposition / bubble-sort) distance.
    Kendall,
    /// Chebyshev distance on single-line notation.
    Linf,
}

impl Metric {
    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Kendall => "kendall",
            Metric::Linf => "linf",
        }
    }

    pub fn distance(self, f: &Permutation, g: &Permutation) -> Result<u64> {
        match self {
            Metric::Kendall => kendall_distance(f, g),
            Metric::Linf => linf_distance(f, g),
        }
    }
}

impl std::str::FromStr for Metric {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kendall" => Ok(Metric::Kendall),
            "linf" => Ok(Metric::Linf),
            other => invalid(format!("unknown metric {other:?}")),
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Minimum number of adjacent transpositions turning `f` into `g`.
///
/// Counts the inversions of `i ↦ g⁻¹(f(i))` with a merge sort, O(n log n).
pub fn kendall_distance(f: &Permutation, g: &Permutation) -> Result<u64> {
    check_same_len(f, g)?;
    Ok(kendall_distance_with_inverse(f, &g.inverse()))
}

/// Same as [`kendall_distance`] with `g⁻¹` already computed; lengths must match.
pub(crate) fn kendall_distance_with_inverse(f: &Permutation, g_inv: &Permutation) -> u64 {
    let mut seq: Vec<usize> = f.entries().iter().map(|&v| g_inv.apply(v)).collect();
    let mut scratch = vec![0; seq.len()];
    count_inversions(&mut seq, &mut scratch)
}

/// Sorts `seq` in place and returns its inversion count.
pub fn count_inversions(seq: &mut [usize], scratch: &mut [usize]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let (left_scratch, right_scratch) = scratch.split_at_mut(mid);
    let mut inv = {
        let (left, right) = seq.split_at_mut(mid);
        count_inversions(left, left_scratch) + count_inversions(right, right_scratch)
    };
    let (mut i, mut j, mut out) = (0, mid, 0);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            scratch[out] = seq[i];
            i += 1;
        } else {
            scratch[out] = seq[j];
            // every remaining left element exceeds seq[j]
            inv += (mid - i) as u64;
            j += 1;
        }
        out += 1;
    }
    scratch[out..out + mid - i].copy_from_slice(&seq[i..mid]);
    out += mid - i;
    scratch[out..out + n - j].copy_from_slice(&seq[j..n]);
    seq.copy_from_slice(&scratch[..n]);
    inv
}

/// `max_i |f(i) - g(i)|`.
pub fn linf_distance(f: &Permutation, g: &Permutation) -> Result<u64> {
    check_same_len(f, g)?;
    Ok(f
        .entries()
        .iter()
        .zip(g.entries())
        .map(|(&a, &b)| a.abs_diff(b) as u64)
        .max()
        .unwrap_or(0))
}

/// `Σ |u_i - w_i|` over integer vectors of equal length.
pub fn l1_distance(u: &[usize], w: &[usize]) -> Result<u64> {
    if u.len() != w.len() {
        return invalid(format!("length mismatch: {} vs {}", u.len(), w.len()));
    }
    Ok(u.iter().zip(w).map(|(&a, &b)| a.abs_diff(b) as u64).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    /// Quadratic pair count, independent of the merge sort.
    fn kendall_pairs(f: &Permutation, g: &Permutation) -> u64 {
        let (fi, gi) = (f.inverse(), g.inverse());
        let n = f.len();
        let mut count = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                if (fi.apply(a) < fi.apply(b)) != (gi.apply(a) < gi.apply(b)) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn kendall_examples() {
        assert_eq!(kendall_distance(&p(&[1, 3, 2]), &p(&[2, 1, 3])).unwrap(), 2);
        assert_eq!(kendall_distance(&p(&[1, 3, 2]), &p(&[2, 3, 1])).unwrap(), 3);
        assert_eq!(kendall_distance(&Permutation::identity(4), &p(&[4, 3, 2, 1])).unwrap(), 6);
        assert!(kendall_distance(&p(&[1, 2]), &p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn kendall_matches_pair_count_on_s5() {
        let all: Vec<_> = crate::perm::permutations(5).collect();
        for f in &all {
            for g in all.iter().step_by(7) {
                assert_eq!(kendall_distance(f, g).unwrap(), kendall_pairs(f, g));
            }
        }
    }

    #[test]
    fn linf_examples() {
        let f = p(&[3, 1, 2, 4]);
        assert_eq!(linf_distance(&f, &f).unwrap(), 0);
        assert_eq!(linf_distance(&p(&[1, 3, 2, 4]), &f).unwrap(), 2);
        assert_eq!(linf_distance(&Permutation::identity(7), &Permutation::reversal(7)).unwrap(), 6);
        assert!(linf_distance(&p(&[1]), &p(&[1, 2])).is_err());
    }

    #[test]
    fn l1_examples() {
        assert_eq!(l1_distance(&[0, 0, 1, 2, 0], &[0, 1, 1, 1, 0]).unwrap(), 2);
        assert_eq!(l1_distance(&[0, 1, 2], &[0, 1, 2]).unwrap(), 0);
        assert_eq!(l1_distance(&[0, 1], &[0, 0]).unwrap(), 1);
        assert!(l1_distance(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn metric_names_round_trip() {
        for m in [Metric::Kendall, Metric::Linf] {
            assert_eq!(m.as_str().parse::<Metric>().unwrap(), m);
        }
        assert!("hamming".parse::<Metric>().is_err());
    }
}
