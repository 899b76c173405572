use crate::error::{invalid, Result};

use super::permutation::Permutation;

/// Mixed-radix inversion table `[v_1, ..., v_n]` with `v_i ∈ Z_i`.
///
/// `v_i` counts the values smaller than `i` that sit to the right of `i`.
/// The always-zero `v_1` is stored explicitly so that digit `i` lives at
/// 1-based index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factoradic {
    digits: Vec<usize>,
}

impl Factoradic {
    pub fn new(digits: Vec<usize>) -> Result<Self> {
        if digits.is_empty() {
            return invalid("factoradic must have at least one digit");
        }
        if let Some((i, &v)) = digits.iter().enumerate().find(|&(i, &v)| v > i) {
            return invalid(format!("digit {} = {v} outside Z_{}", i + 1, i + 1));
        }
        Ok(Self { digits })
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        Self { digits: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// Digit `i` for 1-based `i`.
    pub fn digit(&self, i: usize) -> usize {
        self.digits[i - 1]
    }

    pub fn into_digits(self) -> Vec<usize> {
        self.digits
    }
}

/// Inversion table of `f`, computed right to left with a Fenwick tree.
pub fn phi(f: &Permutation) -> Factoradic {
    let n = f.len();
    let mut tree = vec![0usize; n + 1];
    let mut digits = vec![0; n];
    for &v in f.entries().iter().rev() {
        // values < v already seen, i.e. to the right of v
        let mut i = v - 1;
        let mut count = 0;
        while i > 0 {
            count += tree[i];
            i &= i - 1;
        }
        digits[v - 1] = count;
        let mut i = v;
        while i <= n {
            tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }
    Factoradic { digits }
}

/// Inverse of [`phi`]: inserts `1, 2, ..., n` in turn so that exactly `v_i`
/// already-placed values end up to the right of `i`.
pub fn phi_inverse(v: &Factoradic) -> Permutation {
    let mut entries: Vec<usize> = Vec::with_capacity(v.len());
    for (idx, &d) in v.digits().iter().enumerate() {
        let pos = entries.len() - d;
        entries.insert(pos, idx + 1);
    }
    Permutation::from_vec_unchecked(entries)
}

/// Validates raw digits and converts them; errors if any digit exceeds its radix.
pub fn phi_inverse_digits(digits: &[usize]) -> Result<Permutation> {
    Ok(phi_inverse(&Factoradic::new(digits.to_vec())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p(&[6, 1, 3, 2, 5, 4])).digits(), &[0, 0, 1, 0, 1, 5]);
        assert_eq!(phi(&Permutation::identity(7)).digits(), &[0; 7]);
        assert_eq!(phi(&p(&[2, 1])).digits(), &[0, 1]);
        // the non-equivalence pair
        assert_eq!(phi(&p(&[1, 4, 3, 2, 5])).digits(), &[0, 0, 1, 2, 0]);
        assert_eq!(phi(&p(&[2, 3, 4, 1, 5])).digits(), &[0, 1, 1, 1, 0]);
    }

    #[test]
    fn phi_inverse_examples() {
        let v = Factoradic::new(vec![0, 0, 1, 0, 1, 5]).unwrap();
        assert_eq!(phi_inverse(&v), p(&[6, 1, 3, 2, 5, 4]));
        assert_eq!(phi_inverse(&Factoradic::zero(5)), Permutation::identity(5));
        assert_eq!(phi_inverse_digits(&[0, 1, 0, 2]).unwrap(), p(&[2, 4, 1, 3]));
    }

    #[test]
    fn radix_violations_rejected() {
        assert!(Factoradic::new(vec![1]).is_err());
        assert!(Factoradic::new(vec![0, 2]).is_err());
        assert!(phi_inverse_digits(&[0, 1, 3]).is_err());
        assert!(Factoradic::new(vec![]).is_err());
    }

    #[test]
    fn prefix_consistency_example() {
        let f = p(&[6, 1, 3, 2, 5, 4]);
        let head = f.project_values_prefix(4).unwrap();
        assert_eq!(phi(&head).digits(), &phi(&f).digits()[..4]);
    }
}
