use std::collections::BTreeSet;

use super::distance::{linf_distance, Metric};
use super::permutation::Permutation;
use super::ranking::permutations;

/// All permutations within distance `radius` of `center`.
///
/// Exponential cost. The Kendall ball is grown breadth-first through adjacent
/// transpositions and never calls [`super::kendall_distance`], so it doubles as
/// an independent check on it. The ℓ∞ ball filters all of `S_n`.
pub fn ball_enumerate(center: &Permutation, radius: u64, metric: Metric) -> BTreeSet<Permutation> {
    match metric {
        Metric::Kendall => kendall_ball(center, radius),
        Metric::Linf => permutations(center.len())
            .filter(|g| linf_distance(center, g).expect("same length") <= radius)
            .collect(),
    }
}

fn kendall_ball(center: &Permutation, radius: u64) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::new();
    seen.insert(center.clone());
    let mut frontier = vec![center.clone()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for f in &frontier {
            for i in 1..f.len() {
                let g = f.adjacent_transposition(i).expect("index in range");
                if seen.insert(g.clone()) {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kendall_ball_examples() {
        let f = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(ball_enumerate(&f, 0, Metric::Kendall).into_iter().collect::<Vec<_>>(), vec![f]);
        let ball = ball_enumerate(&Permutation::identity(3), 1, Metric::Kendall);
        let expected: BTreeSet<_> = [vec![1, 2, 3], vec![2, 1, 3], vec![1, 3, 2]]
            .into_iter()
            .map(|v| Permutation::new(v).unwrap())
            .collect();
        assert_eq!(ball, expected);
        assert_eq!(ball_enumerate(&Permutation::identity(4), 2, Metric::Kendall).len(), 9);
        assert_eq!(ball_enumerate(&Permutation::identity(4), 6, Metric::Kendall).len(), 24);
    }

    #[test]
    fn ball_size_independent_of_center() {
        for n in 1..=5 {
            for r in 0..=4 {
                let sizes: BTreeSet<usize> = permutations(n)
                    .step_by(5)
                    .map(|c| ball_enumerate(&c, r, Metric::Kendall).len())
                    .collect();
                assert_eq!(sizes.len(), 1, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn linf_ball_small() {
        // permutations with |g(i) - i| <= 1 are counted by Fibonacci numbers
        assert_eq!(ball_enumerate(&Permutation::identity(5), 1, Metric::Linf).len(), 8);
        assert_eq!(ball_enumerate(&Permutation::identity(4), 3, Metric::Linf).len(), 24);
    }
}
